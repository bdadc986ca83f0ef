#include "altsplit/dense_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace altsplit {

namespace {

// Relative asymmetry below which the symmetric eigensolver is used.
constexpr double kSymmetryTol = 1e-13;

std::string dims(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

bool numerically_symmetric(const Matrix& m) {
    if (m.rows() != m.cols()) return false;
    const double scale = max_abs(m);
    if (scale == 0.0) return true;
    return max_abs_diff(m, m.transpose()) <= kSymmetryTol * scale;
}

}  // namespace

void ToleranceProfile::validate() const {
    for (double v : {rank_tol, eq_tol, one_tol, nonneg_tol}) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidArgument("tolerance fields must be finite and nonnegative");
        }
    }
}

void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw NotSquare(std::string(what) + " must be square and nonempty, got " + dims(m));
    }
}

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) throw NonFiniteEntry(std::string(what) + " has a NaN or Inf entry");
}

void require_finite(const Vector& v, const char* what) {
    if (!v.allFinite()) throw NonFiniteEntry(std::string(what) + " has a NaN or Inf entry");
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("cannot compare " + dims(a) + " with " + dims(b));
    }
    return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const Matrix& a, const Matrix& b, const ToleranceProfile& tol) {
    const double scale = std::max({1.0, max_abs(a), max_abs(b)});
    return max_abs_diff(a, b) <= tol.eq_tol * scale;
}

bool is_diagonal(const Matrix& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (i != j && m(i, j) != 0.0) return false;
    return true;
}

Vector singular_values(const Matrix& m) {
    if (m.size() == 0) return Vector();
    if (m.rows() == m.cols() && is_diagonal(m)) {
        Vector s = m.diagonal().cwiseAbs();
        std::sort(s.begin(), s.end(), std::greater<>());
        return s;
    }
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues();
}

Index rank(const Matrix& m, const ToleranceProfile& tol, double scale) {
    const Vector s = singular_values(m);
    if (s.size() == 0 || s(0) == 0.0) return 0;
    const double cutoff = tol.rank_tol * std::max(s(0), scale);
    return static_cast<Index>(std::count_if(s.begin(), s.end(), [&](double x) { return x > cutoff; }));
}

ComplexVector eigenvalues(const Matrix& m) {
    require_square(m, "eigenvalue argument");
    require_finite(m, "eigenvalue argument");
    if (numerically_symmetric(m)) {
        const Matrix sym = 0.5 * (m + m.transpose());
        Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) {
            throw EigenSolverFailure("symmetric eigensolver did not converge");
        }
        return es.eigenvalues().cast<std::complex<double>>();
    }
    Eigen::EigenSolver<Matrix> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
        throw EigenSolverFailure("dense eigensolver did not converge");
    }
    return es.eigenvalues();
}

double spectral_radius(const Matrix& m) {
    return eigenvalues(m).cwiseAbs().maxCoeff();
}

double gamma(const Matrix& m, const ToleranceProfile& tol) {
    const ComplexVector ev = eigenvalues(m);
    double g = 0.0;
    for (const auto& lambda : ev) {
        if (std::abs(lambda - 1.0) > tol.one_tol) g = std::max(g, std::abs(lambda));
    }
    return g;
}

namespace {

// Full-rank factorization M = F G from column-pivoted QR, with GF.
struct RankFactors {
    Index r = 0;
    Matrix f, g, gf;
};

RankFactors rank_factors(const Matrix& m, Index r) {
    const Index n = m.rows();
    RankFactors out;
    out.r = r;
    Eigen::ColPivHouseholderQR<Matrix> qr(m);
    out.f = qr.householderQ() * Matrix::Identity(n, r);
    const Matrix r_top = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
    out.g = r_top * qr.colsPermutation().transpose();
    out.gf = out.g * out.f;
    return out;
}

// rank(M) == rank(M^2), with the cutoff for M^2 scaled by sigma_max(M)^2 so
// that a numerically zero square is not measured against its own noise, and
// GF well conditioned so that the group inverse is computable.
bool index_one_factors(const Matrix& m, const ToleranceProfile& tol, double scale, RankFactors* out) {
    const Vector sv = singular_values(m);
    const double top = std::max(sv.size() ? sv(0) : 0.0, scale);
    const double cutoff = tol.rank_tol * top;
    if (sv.size() == 0 || sv(0) <= cutoff) {
        if (out) out->r = 0;
        return true;
    }
    const Index r = static_cast<Index>(std::count_if(sv.begin(), sv.end(), [&](double x) { return x > cutoff; }));
    const Vector sv2 = singular_values(Matrix(m * m));
    const Index r2 = static_cast<Index>(
        std::count_if(sv2.begin(), sv2.end(), [&](double x) { return x > tol.rank_tol * top * top; }));
    if (r2 != r) return false;
    RankFactors rf = rank_factors(m, r);
    const Vector gf_sv = singular_values(rf.gf);
    if (gf_sv(r - 1) <= cutoff) return false;
    if (out) *out = std::move(rf);
    return true;
}

}  // namespace

Matrix group_inverse(const Matrix& m, const ToleranceProfile& tol, double scale) {
    require_square(m, "group_inverse argument");
    require_finite(m, "group_inverse argument");
    const Index n = m.rows();
    RankFactors rf;
    if (!index_one_factors(m, tol, scale, &rf)) {
        throw IndexGreaterThanOne("group inverse does not exist: matrix has index greater than one");
    }
    if (rf.r == 0) return Matrix::Zero(n, n);
    Eigen::PartialPivLU<Matrix> lu(rf.gf);
    return rf.f * lu.solve(lu.solve(rf.g));
}

bool index_at_most_one(const Matrix& m, const ToleranceProfile& tol, double scale) {
    require_square(m, "index_at_most_one argument");
    return index_one_factors(m, tol, scale, nullptr);
}

Matrix range_projector(const Matrix& m, const ToleranceProfile& tol) {
    const Index r = rank(m, tol);
    if (r == 0) return Matrix::Zero(m.rows(), m.rows());
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullU);
    const auto basis = svd.matrixU().leftCols(r);
    return basis * basis.transpose();
}

Matrix null_projector(const Matrix& m, const ToleranceProfile& tol) {
    const Index r = rank(m, tol);
    const Matrix id = Matrix::Identity(m.cols(), m.cols());
    if (r == 0) return id;
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const auto row_basis = svd.matrixV().leftCols(r);
    return id - row_basis * row_basis.transpose();
}

bool same_range(const Matrix& m, const Matrix& n, const ToleranceProfile& tol) {
    if (m.rows() != n.rows()) return false;
    if (rank(m, tol) != rank(n, tol)) return false;
    return max_abs_diff(range_projector(m, tol), range_projector(n, tol)) < tol.eq_tol;
}

bool same_null(const Matrix& m, const Matrix& n, const ToleranceProfile& tol) {
    if (m.cols() != n.cols()) return false;
    if (rank(m, tol) != rank(n, tol)) return false;
    return max_abs_diff(null_projector(m, tol), null_projector(n, tol)) < tol.eq_tol;
}

bool is_nonnegative(const Matrix& m, const ToleranceProfile& tol) {
    return m.size() == 0 || m.minCoeff() >= -tol.nonneg_tol;
}

EntryWitness most_negative_entry(const Matrix& m) {
    EntryWitness w;
    if (m.size() == 0) return w;
    w.value = m.minCoeff(&w.row, &w.col);
    return w;
}

GeneralizedSolver::GeneralizedSolver(const Matrix& m, const ToleranceProfile& tol) : n_(m.rows()) {
    require_square(m, "solver matrix");
    require_finite(m, "solver matrix");
    const bool full_rank = rank(m, tol) == n_;
    if (full_rank && is_diagonal(m)) {
        kind_ = Kind::diagonal;
        diag_inv_ = m.diagonal().cwiseInverse();
    } else if (full_rank) {
        kind_ = Kind::lu;
        lu_.compute(m);
        lu_t_.compute(m.transpose());
    } else {
        kind_ = Kind::group_inverse;
        sharp_ = group_inverse(m, tol);
    }
}

Vector GeneralizedSolver::solve(const Vector& b) const {
    if (b.size() != n_) {
        throw DimensionMismatch("right-hand side has length " + std::to_string(b.size()) +
                                ", expected " + std::to_string(n_));
    }
    switch (kind_) {
        case Kind::diagonal: return diag_inv_.cwiseProduct(b);
        case Kind::lu: return lu_.solve(b);
        case Kind::group_inverse: return sharp_ * b;
    }
    return {};
}

Matrix GeneralizedSolver::solve(const Matrix& b) const {
    if (b.rows() != n_) throw DimensionMismatch("left solve: row count mismatch");
    switch (kind_) {
        case Kind::diagonal: return diag_inv_.asDiagonal() * b;
        case Kind::lu: return lu_.solve(b);
        case Kind::group_inverse: return sharp_ * b;
    }
    return {};
}

Matrix GeneralizedSolver::right_solve(const Matrix& b) const {
    if (b.cols() != n_) throw DimensionMismatch("right solve: column count mismatch");
    switch (kind_) {
        case Kind::diagonal: return b * diag_inv_.asDiagonal();
        case Kind::lu: return lu_t_.solve(Matrix(b.transpose())).transpose();
        case Kind::group_inverse: return b * sharp_;
    }
    return {};
}

Matrix GeneralizedSolver::inverse() const {
    switch (kind_) {
        case Kind::diagonal: return Matrix(diag_inv_.asDiagonal());
        case Kind::lu: return lu_.inverse();
        case Kind::group_inverse: return sharp_;
    }
    return {};
}

Vector gen_solve(const Matrix& m, const Vector& b, const ToleranceProfile& tol) {
    return GeneralizedSolver(m, tol).solve(b);
}

}  // namespace altsplit
