#include "altsplit/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "altsplit/analysis.hpp"

namespace altsplit {

namespace {

constexpr double kPi = 3.14159265358979323846;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Index pick(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

Matrix gaussian(Rng& rng, Index rows, Index cols) {
    std::normal_distribution<double> nd;
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = nd(rng);
    return m;
}

Matrix random_orthogonal(Rng& rng, Index n) {
    Eigen::HouseholderQR<Matrix> qr(gaussian(rng, n, n));
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR();
    for (Index j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) *= -1.0;
    return q;
}

// Square matrix with singular values in [lo, hi] and random signs on the
// diagonal factor.
Matrix random_with_singular_values(Rng& rng, Index n, double lo, double hi) {
    Vector s(n);
    for (Index i = 0; i < n; ++i) s(i) = uniform(rng, lo, hi) * (coin(rng, 0.5) ? 1.0 : -1.0);
    return random_orthogonal(rng, n) * s.asDiagonal() * random_orthogonal(rng, n);
}

Matrix nonnegative(Rng& rng, Index rows, Index cols, double lo, double hi, double density) {
    Matrix m = Matrix::Zero(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i)
            if (coin(rng, density)) m(i, j) = uniform(rng, lo, hi);
    return m;
}

Matrix embed(const Matrix& p, const Matrix& p_inv, const Matrix& block) {
    const Index n = p.rows();
    Matrix d = Matrix::Zero(n, n);
    d.topLeftCorner(block.rows(), block.cols()) = block;
    return p * d * p_inv;
}

double sigma_min(const Matrix& m) {
    const Vector s = singular_values(m);
    return s.size() ? s(s.size() - 1) : 0.0;
}

// Integer matrix with an integer inverse: unit lower times unit upper.
Matrix unimodular(Rng& rng, Index n) {
    Matrix l = Matrix::Identity(n, n);
    Matrix u = Matrix::Identity(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < i; ++j) {
            if (coin(rng, 0.3)) l(i, j) = coin(rng, 0.5) ? 1.0 : -1.0;
            if (coin(rng, 0.3)) u(j, i) = coin(rng, 0.5) ? 1.0 : -1.0;
        }
    return l * u;
}

// Fills d from position `at` with 1x1 or 2x2 real blocks whose eigenvalue
// moduli lie in [lo, hi].
void fill_blocks(Rng& rng, Matrix& d, Index at, double lo, double hi) {
    const Index n = d.rows();
    while (at < n) {
        const double r = uniform(rng, lo, hi);
        if (at + 1 < n && coin(rng, 0.4)) {
            const double th = uniform(rng, 0.2, kPi - 0.2);
            d(at, at) = r * std::cos(th);
            d(at, at + 1) = r * std::sin(th);
            d(at + 1, at) = -r * std::sin(th);
            d(at + 1, at + 1) = r * std::cos(th);
            at += 2;
        } else {
            d(at, at) = coin(rng, 0.5) ? r : -r;
            if (at + 1 < n && coin(rng, 0.15)) {
                d(at + 1, at + 1) = d(at, at);
                d(at, at + 1) = 1.0;
                at += 2;
                continue;
            }
            ++at;
        }
    }
}

std::vector<Splitting> build_splits(const Matrix& a, const std::vector<Matrix>& us) {
    std::vector<Splitting> out;
    for (const auto& u : us) out.push_back(make_splitting(a, u));
    return out;
}

}  // namespace

Matrix random_well_conditioned(Rng& rng, Index n) {
    Vector s(n);
    for (Index i = 0; i < n; ++i) s(i) = uniform(rng, 1.0, 3.0);
    return random_orthogonal(rng, n) * s.asDiagonal() * random_orthogonal(rng, n);
}

Matrix random_index_one(Rng& rng, Index n, Index rank) {
    if (rank < 0 || rank > n) throw InvalidArgument("rank out of range");
    if (rank == 0) return Matrix::Zero(n, n);
    const Matrix p = random_well_conditioned(rng, n);
    return embed(p, p.inverse(), random_with_singular_values(rng, rank, 0.5, 2.0));
}

SplittingInstance random_proper_triple(Rng& rng, Index n, Index rank) {
    if (rank < 1 || rank > n) throw InvalidArgument("rank out of range");
    const Index r = rank;
    const Matrix id = Matrix::Identity(r, r);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Matrix p = random_well_conditioned(rng, n);
        const Matrix p_inv = p.inverse();
        const Matrix ca = random_with_singular_values(rng, r, 0.5, 2.0);
        Matrix c[3];
        bool ok = true;
        for (auto& ci : c) {
            ci = ca + 0.4 * gaussian(rng, r, r) / std::sqrt(static_cast<double>(r));
            ok = ok && sigma_min(ci) > 0.2;
        }
        if (!ok) continue;
        const Matrix core = c[0] + c[2] - ca + (c[2] - ca) * c[1].inverse() * (c[0] - ca);
        const Matrix h = c[2].inverse() * (c[2] - ca) * c[1].inverse() * (c[1] - ca) * c[0].inverse() * (c[0] - ca);
        if (sigma_min(core) < 0.05 || sigma_min(id - h) < 0.05) continue;

        SplittingInstance inst;
        inst.family = rank == n ? "proper-nonsingular" : "proper-singular";
        inst.a = embed(p, p_inv, ca);
        std::vector<Matrix> us;
        for (const auto& ci : c) us.push_back(embed(p, p_inv, ci));
        inst.splits = build_splits(inst.a, us);
        return inst;
    }
    throw InvalidArgument("random_proper_triple: no acceptable draw");
}

SplittingInstance random_group_monotone_triple(Rng& rng, Index n, Index rank, bool both_types) {
    if (rank < 1 || rank > n) throw InvalidArgument("rank out of range");
    const Index r = rank;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix f = Matrix::Zero(n, r);
        Matrix h = Matrix::Zero(r, n);
        // disjoint block supports: each index belongs to one block or none
        std::vector<Index> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (Index k = 0; k < n; ++k) {
            const Index i = order[k];
            Index blk = k < r ? k : pick(rng, 0, r - 1);
            if (k >= r && coin(rng, 0.2)) continue;
            f(i, blk) = uniform(rng, 0.5, 1.5);
            h(blk, i) = uniform(rng, 0.5, 1.5);
        }
        if (!both_types) {
            // sparse coupling between blocks
            f += nonnegative(rng, n, r, 0.05, 0.4, 0.3);
            h += nonnegative(rng, r, n, 0.05, 0.4, 0.3);
        }
        const Matrix hf = h * f;
        const Vector hf_sv = singular_values(hf);
        if (hf_sv(r - 1) < 0.05 * hf_sv(0)) continue;
        const Matrix m = nonnegative(rng, r, r, 0.1, 1.0, 1.0) + 0.5 * Matrix::Identity(r, r);
        Matrix g = f * m * h;
        g /= g.maxCoeff();

        // G# = F (HF)^-1 M^-1 (HF)^-1 H, recomputed from the scaled G
        Matrix a;
        try {
            a = group_inverse(g);
        } catch (const IndexGreaterThanOne&) {
            continue;
        }

        std::vector<Matrix> us;
        for (int s = 0; s < 3 && static_cast<int>(us.size()) == s; ++s) {
            Matrix w = nonnegative(rng, n, n, 0.0, 1.0, 0.5);
            if (!both_types) w = g * w;
            const Matrix gwg = g * w * g;
            double c_max = std::numeric_limits<double>::infinity();
            for (Index j = 0; j < n; ++j)
                for (Index i = 0; i < n; ++i)
                    if (gwg(i, j) > 1e-14 && g(i, j) > 0.0) c_max = std::min(c_max, g(i, j) / gwg(i, j));
            if (!std::isfinite(c_max)) c_max = 1.0;
            const Matrix u_sharp = g - uniform(rng, 0.1, 0.9) * c_max * gwg;
            try {
                us.push_back(group_inverse(u_sharp));
            } catch (const IndexGreaterThanOne&) {
            }
        }
        if (us.size() != 3) continue;

        SplittingInstance inst;
        inst.family = std::string(both_types ? "group-monotone-both" : "group-monotone-typeII") +
                      (rank == n ? "-nonsingular" : "-singular");
        inst.a = a;
        try {
            inst.splits = build_splits(a, us);
        } catch (const Error&) {
            continue;
        }
        bool proper = true;
        for (const auto& s : inst.splits) proper = proper && classify(s).is_proper;
        if (!proper) continue;
        return inst;
    }
    throw InvalidArgument("random_group_monotone_triple: no acceptable draw");
}

namespace {

SplittingInstance m_matrix_triple(Rng& rng, Index n, bool diagonal_only, bool singular) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix off = nonnegative(rng, n, n, 0.1, 1.0, 0.4);
        off.diagonal().setZero();
        for (Index i = 0; i < n; ++i) {
            // a directed cycle keeps the matrix irreducible
            off(i, (i + 1) % n) = std::max(off(i, (i + 1) % n), uniform(rng, 0.1, 1.0));
        }
        Vector x(n);
        for (Index i = 0; i < n; ++i) x(i) = uniform(rng, 0.5, 1.5);
        const Vector ox = off * x;
        Vector d(n);
        for (Index i = 0; i < n; ++i) d(i) = ox(i) / x(i) * (singular ? 1.0 : uniform(rng, 1.05, 1.5));

        SplittingInstance inst;
        inst.family = std::string(singular ? "singular-m-matrix" : "m-matrix") + (diagonal_only ? "-diagonal" : "-masked");
        inst.a = Matrix(d.asDiagonal()) - off;

        std::vector<double> alphas(3);
        for (auto& al : alphas) al = uniform(rng, 1.05, 3.0);
        std::sort(alphas.begin(), alphas.end());
        std::vector<Matrix> us;
        for (double al : alphas) {
            Matrix u = Matrix((al * d).asDiagonal());
            if (!diagonal_only) {
                for (Index j = 0; j < n; ++j)
                    for (Index i = 0; i < n; ++i)
                        if (off(i, j) > 0.0 && coin(rng, 0.5)) u(i, j) = -off(i, j);
            }
            us.push_back(u);
        }
        try {
            inst.splits = build_splits(inst.a, us);
        } catch (const Error&) {
            continue;
        }
        bool nonsingular = true;
        for (const auto& s : inst.splits) nonsingular = nonsingular && s.u_is_nonsingular();
        if (!nonsingular) continue;
        return inst;
    }
    throw InvalidArgument("M-matrix generator: no acceptable draw");
}

}  // namespace

SplittingInstance random_m_matrix_triple(Rng& rng, Index n, bool diagonal_only) {
    return m_matrix_triple(rng, n, diagonal_only, false);
}

SplittingInstance random_singular_m_matrix_triple(Rng& rng, Index n, bool diagonal_only) {
    return m_matrix_triple(rng, n, diagonal_only, true);
}

SplittingInstance random_quasi_regular_triple(Rng& rng, Index n) {
    if (n < 3) throw InvalidArgument("quasi-regular triples need n >= 3");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // support S of both null vectors, 2 <= |S| <= n - 1
        std::vector<Index> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const Index s_size = pick(rng, 2, n - 1);
        std::vector<bool> in_s(n, false);
        for (Index k = 0; k < s_size; ++k) in_s[order[k]] = true;

        Vector v = Vector::Zero(n);
        Vector l = Vector::Zero(n);
        for (Index i = 0; i < n; ++i)
            if (in_s[i]) {
                v(i) = uniform(rng, 0.5, 1.5);
                l(i) = uniform(rng, 0.5, 1.5);
            }

        // U: nonsingular M-matrix
        Matrix off = nonnegative(rng, n, n, 0.1, 1.0, 0.5);
        off.diagonal().setZero();
        Vector d(n);
        for (Index i = 0; i < n; ++i) d(i) = off.row(i).sum() * uniform(rng, 1.2, 2.0) + 0.5;
        const Matrix u = Matrix(d.asDiagonal()) - off;

        Matrix nn = nonnegative(rng, n, n, 0.1, 1.0, 0.6);
        for (Index i = 0; i < n; ++i)
            if (in_s[i]) {
                nn.row(i).setZero();
                nn.col(i).setZero();
            }

        const Vector lu = u.transpose() * l;
        const double denom = lu.dot(v);
        if (denom < 1e-3) continue;
        const Matrix k1 = Matrix::Identity(n, n) - v * lu.transpose() / denom;
        const Matrix a = u * k1 - nn;

        std::vector<Matrix> us{u};
        for (int s = 0; s < 2; ++s) {
            Matrix ui = u;
            for (Index i = 0; i < n; ++i)
                if (!in_s[i]) ui(i, i) += uniform(rng, 0.0, 1.0);
            us.push_back(ui);
        }

        SplittingInstance inst;
        inst.family = "quasi-regular";
        inst.a = a;
        try {
            if (!index_at_most_one(a)) continue;
            inst.splits = build_splits(a, us);
        } catch (const Error&) {
            continue;
        }
        bool ok = true;
        for (const auto& sp : inst.splits) {
            ok = ok && classify(sp).is_quasi_regular && is_semiconvergent(sp.iteration_matrix()).verdict;
        }
        if (!ok) continue;
        return inst;
    }
    throw InvalidArgument("random_quasi_regular_triple: no acceptable draw");
}

const char* to_string(IterationKind kind) {
    switch (kind) {
        case IterationKind::convergent: return "convergent";
        case IterationKind::semiconvergent: return "semiconvergent";
        case IterationKind::divergent: return "divergent";
        case IterationKind::jordan_at_one: return "jordan-at-one";
        case IterationKind::unit_circle: return "unit-circle";
        case IterationKind::stochastic: return "stochastic";
    }
    return "?";
}

Matrix random_iteration_matrix(Rng& rng, Index n, IterationKind kind) {
    if (n < 1) throw InvalidArgument("size must be positive");
    if (kind == IterationKind::stochastic) {
        Matrix t = nonnegative(rng, n, n, 0.0, 1.0, 0.5);
        for (Index i = 0; i < n; ++i) {
            t(i, i) = uniform(rng, 0.1, 1.0);
            t.row(i) /= t.row(i).sum();
        }
        return t;
    }

    Matrix d = Matrix::Zero(n, n);
    Index at = 0;
    switch (kind) {
        case IterationKind::convergent: break;
        case IterationKind::semiconvergent: {
            const Index ones = pick(rng, 1, std::max<Index>(1, n / 3));
            for (; at < ones; ++at) d(at, at) = 1.0;
            break;
        }
        case IterationKind::divergent: {
            const double r = uniform(rng, 1.1, 2.0);
            if (n >= 2 && coin(rng, 0.4)) {
                const double th = uniform(rng, 0.2, kPi - 0.2);
                d(0, 0) = d(1, 1) = r * std::cos(th);
                d(0, 1) = r * std::sin(th);
                d(1, 0) = -d(0, 1);
                at = 2;
            } else {
                d(0, 0) = coin(rng, 0.5) ? r : -r;
                at = 1;
            }
            break;
        }
        case IterationKind::jordan_at_one:
            if (n < 2) throw InvalidArgument("a Jordan block needs n >= 2");
            d(0, 0) = d(1, 1) = d(0, 1) = 1.0;
            at = 2;
            break;
        case IterationKind::unit_circle:
            if (n >= 2 && coin(rng, 0.5)) {
                const double th = uniform(rng, 0.3, kPi - 0.3);
                d(0, 0) = d(1, 1) = std::cos(th);
                d(0, 1) = std::sin(th);
                d(1, 0) = -d(0, 1);
                at = 2;
            } else {
                d(0, 0) = -1.0;
                at = 1;
            }
            if (at < n && coin(rng, 0.5)) {
                d(at, at) = 1.0;
                ++at;
            }
            break;
        case IterationKind::stochastic: break;
    }
    fill_blocks(rng, d, at, 0.0, 0.9);

    const Matrix p = coin(rng, 0.5) ? unimodular(rng, n) : random_well_conditioned(rng, n);
    return p * d * p.inverse();
}

}  // namespace altsplit
