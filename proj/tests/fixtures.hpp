#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "altsplit/splittings.hpp"

namespace fixtures {

using altsplit::Matrix;
using altsplit::Splitting;

// Singular index-one matrix with a nonnegative group inverse, split three ways.
inline Matrix ex_a() {
    Matrix a(3, 3);
    a << 1, 0, 1, -2, 4, -2, 0, 0, 0;
    return a;
}

inline Matrix ex_a_sharp() {
    Matrix a(3, 3);
    a << 1, 0, 1, 0.5, 0.25, 0.5, 0, 0, 0;
    return a;
}

inline Matrix ex_k() {
    Matrix m(3, 3);
    m << 0.5, 0, 0.5, -6, 12, -6, 0, 0, 0;
    return m;
}

inline Matrix ex_u() {
    Matrix m(3, 3);
    m << 0.5, 0, 0.5, -8, 16, -8, 0, 0, 0;
    return m;
}

inline Matrix ex_x() {
    Matrix m(3, 3);
    m << 0.8, 0, 0.8, -4, 8, -4, 0, 0, 0;
    return m;
}

inline std::vector<Splitting> ex_triple() {
    return {altsplit::make_splitting(ex_a(), ex_k()), altsplit::make_splitting(ex_a(), ex_u()),
            altsplit::make_splitting(ex_a(), ex_x())};
}

// Group inverse from the Moore-Penrose inverse: A# = A (A^3)^+ A.
inline Matrix sharp_oracle(const Matrix& a) {
    const Matrix a3 = a * a * a;
    return a * a3.completeOrthogonalDecomposition().pseudoInverse() * a;
}

inline Matrix kron(const Matrix& p, const Matrix& q) {
    Matrix out(p.rows() * q.rows(), p.cols() * q.cols());
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (Eigen::Index j = 0; j < p.cols(); ++j) out.block(i * q.rows(), j * q.cols(), q.rows(), q.cols()) = p(i, j) * q;
    return out;
}

inline Matrix tridiag(Eigen::Index n, double lo, double d, double hi) {
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = d;
        if (i > 0) m(i, i - 1) = lo;
        if (i + 1 < n) m(i, i + 1) = hi;
    }
    return m;
}

// Scratch directory removed on scope exit.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("altsplit_test_" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

}  // namespace fixtures
