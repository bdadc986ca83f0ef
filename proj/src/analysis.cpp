#include "altsplit/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>

namespace altsplit {

SemiconvergenceCertificate is_semiconvergent(const Matrix& t, const ToleranceProfile& tol) {
    require_square(t, "T");
    SemiconvergenceCertificate c;
    const ComplexVector ev = eigenvalues(t);
    for (const auto& lambda : ev) {
        const double mod = std::abs(lambda);
        c.rho = std::max(c.rho, mod);
        if (std::abs(lambda - 1.0) <= tol.one_tol) {
            c.has_eigenvalue_one = true;
        } else {
            c.gamma = std::max(c.gamma, mod);
        }
    }

    const Index n = t.rows();
    const Matrix i_minus_t = Matrix::Identity(n, n) - t;
    const double scale = t.size() ? std::max(1.0, singular_values(t)(0)) : 1.0;
    if (rank(i_minus_t, tol, scale) == n) {
        c.index_of_I_minus_T = 0;
    } else {
        c.index_of_I_minus_T = index_at_most_one(i_minus_t, tol, scale) ? 1 : 2;
    }

    c.verdict = c.rho <= 1.0 + tol.one_tol && c.gamma < 1.0 - tol.one_tol && c.index_of_I_minus_T <= 1;
    if (c.verdict) {
        c.limit_matrix = Matrix::Identity(n, n) - i_minus_t * group_inverse(i_minus_t, tol, scale);
    }
    return c;
}

std::optional<Matrix> power_limit_oracle(const Matrix& t, int k_max, const ToleranceProfile& tol) {
    require_square(t, "T");
    // Squaring a Jordan block at 1 cancels to garbage once entries reach
    // about 1/sqrt(eps), so growth is cut off well before that.
    const double blow_up = std::min(1e7, 1e5 * std::max(1.0, max_abs(t)));
    Matrix p = t;
    for (int k = 0; k < k_max; ++k) {
        Matrix p2 = p * p;
        if (!p2.allFinite() || max_abs(p2) > blow_up) return std::nullopt;
        // T^(2^k) may freeze on a periodic pattern; the limit must also absorb T.
        if (approx_equal(p2, p, tol) && approx_equal(Matrix(p2 * t), p2, tol)) return p2;
        p = std::move(p2);
    }
    return std::nullopt;
}

bool is_m_matrix_with_property_c(const Matrix& a, const ToleranceProfile& tol) {
    require_square(a, "A");
    const Index n = a.rows();
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
            if (i != j && a(i, j) > tol.nonneg_tol) return false;
    const double max_diag = a.diagonal().maxCoeff();
    const double s = max_diag > 0.0 ? 2.0 * max_diag : 1.0;
    const Matrix b = s * Matrix::Identity(n, n) - a;
    if (spectral_radius(b) > s * (1.0 + tol.one_tol)) return false;
    return is_semiconvergent(b / s, tol).verdict;
}

Matrix shifted_matrix(const Matrix& h, double delta) {
    require_square(h, "H");
    return delta * h + (1.0 - delta) * Matrix::Identity(h.rows(), h.cols());
}

const std::vector<std::string>& convergence_theorem_ids() {
    static const std::vector<std::string> ids{"typeII-convergence", "single-vs-three", "both-types-comparison",
                                              "two-vs-three"};
    return ids;
}

const std::vector<std::string>& semiconvergence_theorem_ids() {
    static const std::vector<std::string> ids{"regular-semiconvergence", "delta-shift",       "induced-regular",
                                              "quasi-three-step",        "quasi-single-vs-three", "quasi-comparison",
                                              "quasi-two-vs-three"};
    return ids;
}

namespace {

const char* kSplitNames[] = {"K", "U", "X"};

std::string split_name(std::size_t i, std::size_t count) {
    return count == 3 ? kSplitNames[i] : "splitting " + std::to_string(i + 1);
}

// Collects named hypothesis failures.
struct HypothesisLog {
    TheoremVerdict& v;
    void require(bool ok, const std::string& what) {
        if (!ok) v.hypothesis_failures.push_back(what);
    }
    void finish() { v.hypotheses_hold = v.hypothesis_failures.empty(); }
};

bool ge_identity(const Matrix& m, const ToleranceProfile& tol) {
    return is_nonnegative(Matrix(m - Matrix::Identity(m.rows(), m.cols())), tol);
}

void require_count(std::span<const Splitting> splits, std::size_t lo, std::size_t hi, const std::string& id) {
    if (splits.size() < lo || splits.size() > hi) {
        throw InvalidArgument(id + " needs " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                              " splittings, got " + std::to_string(splits.size()));
    }
}

std::optional<Matrix> group_monotone_sharp(const Matrix& a, HypothesisLog& log, const ToleranceProfile& tol) {
    try {
        Matrix sharp = group_inverse(a, tol);
        log.require(is_nonnegative(sharp, tol), "A is not group monotone (A# has a negative entry)");
        return sharp;
    } catch (const IndexGreaterThanOne&) {
        log.require(false, "A has index greater than one");
        return std::nullopt;
    }
}

void require_core_range_null(std::span<const Splitting> splits, HypothesisLog& log, const ToleranceProfile& tol) {
    const Matrix core = induced_core(splits, tol);
    const Matrix& a = splits.front().a();
    log.require(same_range(core, a, tol), "R(K + X - A + YU#L) != R(A)");
    log.require(same_null(core, a, tol), "N(K + X - A + YU#L) != N(A)");
}

std::optional<Splitting> try_induced(const Matrix& a, const Matrix& h, HypothesisLog& log, const std::string& name,
                                     const ToleranceProfile& tol) {
    try {
        return induced_splitting(a, h, tol);
    } catch (const Error& e) {
        log.require(false, name + " does not exist (" + e.what() + ")");
        return std::nullopt;
    }
}

std::array<Matrix, 3> pair_matrices(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    const std::array<Splitting, 2> ku{splits[0], splits[1]};
    const std::array<Splitting, 2> kx{splits[0], splits[2]};
    const std::array<Splitting, 2> ux{splits[1], splits[2]};
    return {alternating_iteration_matrix(ku, tol), alternating_iteration_matrix(kx, tol),
            alternating_iteration_matrix(ux, tol)};
}

const char* kPairNames[] = {"12", "13", "23"};

TheoremVerdict convergence_comparison(const std::string& id, std::span<const Splitting> splits, bool both_types,
                                      const ToleranceProfile& tol) {
    TheoremVerdict v;
    v.theorem_id = id;
    HypothesisLog log{v};
    const Matrix& a = splits.front().a();

    for (std::size_t i = 0; i < splits.size(); ++i) {
        const auto report = classify(splits[i], tol);
        const std::string name = split_name(i, splits.size());
        if (!report.is_g_weak_regular_type2) {
            log.require(false, name + " is not proper G-weak regular type II (" +
                                   report.reason_for("g_weak_regular_type2") + ")");
        }
        if (both_types && !report.is_g_weak_regular_type1) {
            log.require(false, name + " is not proper G-weak regular type I (" +
                                   report.reason_for("g_weak_regular_type1") + ")");
        }
    }
    group_monotone_sharp(a, log, tol);
    require_core_range_null(splits, log, tol);

    const Matrix h = alternating_iteration_matrix(splits, tol);
    const double rho_h = spectral_radius(h);
    v.measured["rho_H"] = rho_h;

    double bound = 0.0;
    if (id == "two-vs-three") {
        const auto pairs = pair_matrices(splits, tol);
        bound = std::numeric_limits<double>::infinity();
        const auto b = try_induced(a, h, log, "induced splitting B", tol);
        std::optional<Matrix> b_sharp;
        if (b) b_sharp = b->u_sharp();
        for (int p = 0; p < 3; ++p) {
            const double r = spectral_radius(pairs[p]);
            v.measured[std::string("rho_H") + kPairNames[p]] = r;
            bound = std::min(bound, r);
            const std::string bname = std::string("B") + kPairNames[p];
            const auto bij = try_induced(a, pairs[p], log, bname, tol);
            if (!bij) continue;
            log.require(classify(*bij, tol).is_g_weak_regular_type2, bname + " is not proper G-weak regular type II");
            if (b_sharp) log.require(ge_identity(Matrix(bij->u() * *b_sharp), tol), bname + "B# >= I fails");
        }
    } else {
        bound = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < splits.size(); ++i) {
            const double r = spectral_radius(splits[i].iteration_matrix());
            v.measured["rho_" + split_name(i, splits.size())] = r;
            bound = std::min(bound, r);
        }
        if (!both_types) {
            if (const auto b = try_induced(a, h, log, "induced splitting B", tol)) {
                const Matrix b_sharp = b->u_sharp();
                for (std::size_t i = 0; i < splits.size(); ++i) {
                    const std::string name = split_name(i, splits.size());
                    log.require(ge_identity(Matrix(splits[i].u() * b_sharp), tol), name + "B# >= I fails");
                }
            }
        }
    }
    v.measured["bound"] = bound;
    log.finish();
    v.conclusion_holds = rho_h <= bound + kConclusionSlack && bound < 1.0;
    return v;
}

// 0 if T is nonsingular, 1 if index(T) = 1, else 2.
int index_of(const Matrix& t, const ToleranceProfile& tol, double scale = 0.0) {
    if (rank(t, tol, scale) == t.rows()) return 0;
    return index_at_most_one(t, tol, scale) ? 1 : 2;
}

int index_of_i_minus(const Matrix& t, const ToleranceProfile& tol) {
    const double scale = t.size() ? std::max(1.0, singular_values(t)(0)) : 1.0;
    return index_of(Matrix(Matrix::Identity(t.rows(), t.cols()) - t), tol, scale);
}

void require_nonsingular_u(std::span<const Splitting> splits, HypothesisLog& log) {
    for (std::size_t i = 0; i < splits.size(); ++i) {
        log.require(splits[i].u_is_nonsingular(), split_name(i, splits.size()) + " has singular U");
    }
}

bool require_regular(std::span<const Splitting> splits, HypothesisLog& log, const ToleranceProfile& tol) {
    bool all = true;
    for (std::size_t i = 0; i < splits.size(); ++i) {
        const auto report = classify(splits[i], tol);
        if (!report.is_regular) {
            all = false;
            log.require(false, split_name(i, splits.size()) + " is not regular (" + report.reason_for("regular") + ")");
        }
    }
    return all;
}

bool core_nonsingular(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    const Matrix core = induced_core(splits, tol);
    return rank(core, tol) == core.rows();
}

// Quasi class selector shared by the quasi theorems.
enum class QuasiKind { regular, type1, type2 };

bool quasi_member(const SplittingClassReport& r, QuasiKind kind) {
    switch (kind) {
        case QuasiKind::regular: return r.is_quasi_regular;
        case QuasiKind::type1: return r.is_quasi_weak_regular_type1;
        case QuasiKind::type2: return r.is_quasi_weak_regular_type2;
    }
    return false;
}

const char* quasi_key(QuasiKind kind) {
    switch (kind) {
        case QuasiKind::regular: return "quasi_regular";
        case QuasiKind::type1: return "quasi_weak_regular_type1";
        case QuasiKind::type2: return "quasi_weak_regular_type2";
    }
    return "";
}

void record_indices(TheoremVerdict& v, const std::string& name, const Matrix& t, const ToleranceProfile& tol) {
    v.measured["index_" + name] = index_of(t, tol);
    v.measured["index_I_minus_" + name] = index_of_i_minus(t, tol);
}

TheoremVerdict regular_family(const std::string& id, std::span<const Splitting> splits, const ToleranceProfile& tol,
                              std::optional<double> delta) {
    TheoremVerdict v;
    v.theorem_id = id;
    HypothesisLog log{v};
    const Matrix& a = splits.front().a();
    require_nonsingular_u(splits, log);
    const bool regular = require_regular(splits, log, tol);
    const bool nonsingular_core = core_nonsingular(splits, tol);
    log.require(nonsingular_core, "K + X - A + YU^-1L is singular");

    if (id == "induced-regular") {
        const bool singular_a = rank(a, tol) < a.rows();
        log.require(singular_a, "A is nonsingular");
        log.finish();
        if (!regular || !nonsingular_core || !singular_a) {
            v.conclusion_holds = false;
            return v;
        }
        const Matrix h = alternating_iteration_matrix(splits, tol);
        const Splitting b0 = core_induced_splitting(splits, tol);
        const auto b0_report = classify(b0, tol);
        v.measured["B0_regular"] = b0_report.is_regular ? 1.0 : 0.0;
        v.measured["B0_weak_regular"] = b0_report.is_weak_regular_type1 ? 1.0 : 0.0;
        const auto b = find_regular_induced_splitting(splits, tol);
        v.measured["regular_B_found"] = b ? 1.0 : 0.0;
        if (!b) {
            v.conclusion_holds = false;
            return v;
        }
        const double mismatch = max_abs_diff(b->iteration_matrix(), h);
        v.measured["max|B^-1C - H|"] = mismatch;
        v.conclusion_holds = mismatch <= 1e3 * tol.eq_tol * std::max(1.0, max_abs(h));
        return v;
    }

    log.require(is_m_matrix_with_property_c(a, tol), "A is not an M-matrix with property c");
    const Matrix h = alternating_iteration_matrix(splits, tol);
    if (id == "regular-semiconvergence") {
        const double min_diag = h.diagonal().minCoeff();
        v.measured["min_diag_H"] = min_diag;
        log.require(min_diag > 0.0, "diag(H) is not positive");
        log.finish();
        const auto cert = is_semiconvergent(h, tol);
        v.measured["rho_H"] = cert.rho;
        v.measured["gamma_H"] = cert.gamma;
        v.conclusion_holds = cert.verdict;
        return v;
    }
    // delta-shift
    log.finish();
    v.measured["delta"] = *delta;
    const auto cert = is_semiconvergent(shifted_matrix(h, *delta), tol);
    v.measured["rho_H_delta"] = cert.rho;
    v.measured["gamma_H_delta"] = cert.gamma;
    v.conclusion_holds = cert.verdict;
    return v;
}

TheoremVerdict quasi_family(const std::string& id, std::span<const Splitting> splits, const ToleranceProfile& tol) {
    TheoremVerdict v;
    v.theorem_id = id;
    HypothesisLog log{v};
    const Matrix& a = splits.front().a();
    require_nonsingular_u(splits, log);
    if (!v.hypothesis_failures.empty()) {
        log.finish();
        return v;
    }
    log.require(rank(a, tol) < a.rows(), "A is nonsingular");

    std::vector<SplittingClassReport> reports;
    std::vector<Matrix> ts;
    for (const auto& s : splits) {
        reports.push_back(classify(s, tol));
        ts.push_back(s.iteration_matrix());
    }
    const Matrix h = alternating_iteration_matrix(splits, tol);
    const auto cert_h = is_semiconvergent(h, tol);
    v.measured["rho_H"] = cert_h.rho;
    v.measured["gamma_H"] = cert_h.gamma;
    for (std::size_t i = 0; i < splits.size(); ++i) {
        const std::string name = split_name(i, splits.size());
        record_indices(v, "T_" + name, ts[i], tol);
        v.measured["gamma_" + name] = gamma(ts[i], tol);
    }
    record_indices(v, "H", h, tol);

    auto require_class = [&](std::size_t i, QuasiKind kind) {
        if (!quasi_member(reports[i], kind)) {
            log.require(false, split_name(i, splits.size()) + " is not " + quasi_key(kind) + " (" +
                                   reports[i].reason_for(quasi_key(kind)) + ")");
        }
    };
    auto require_semiconvergent = [&](std::size_t i) {
        log.require(is_semiconvergent(ts[i], tol).verdict,
                    split_name(i, splits.size()) + " iteration matrix is not semiconvergent");
    };
    auto require_index_i_minus = [&](const std::string& name, const Matrix& t) {
        log.require(index_of_i_minus(t, tol) <= 1, "index(I - " + name + ") > 1");
    };

    if (id == "quasi-three-step") {
        std::optional<QuasiKind> kind;
        for (QuasiKind k : {QuasiKind::type1, QuasiKind::type2, QuasiKind::regular}) {
            if (std::all_of(reports.begin(), reports.end(), [&](const auto& r) { return quasi_member(r, k); })) {
                kind = k;
                break;
            }
        }
        log.require(kind.has_value(), "splittings are not all quasi splittings of one common type");
        for (std::size_t i = 0; i < splits.size(); ++i) {
            require_semiconvergent(i);
            log.require(index_of(ts[i], tol) <= 1, "index(T_" + split_name(i, splits.size()) + ") > 1");
        }
        const std::array<Splitting, 2> ku{splits[0], splits[1]};
        require_index_i_minus("U^-1VK^-1L", alternating_iteration_matrix(ku, tol));
        log.require(index_of(h, tol) <= 1, "index(H) > 1");
        log.finish();

        bool induced_ok = false;
        if (kind) {
            try {
                const Splitting b = core_induced_splitting(splits, tol);
                induced_ok = b.u_is_nonsingular() && quasi_member(classify(b, tol), *kind);
            } catch (const Error&) {
                induced_ok = false;
            }
        }
        v.measured["induced_same_type"] = induced_ok ? 1.0 : 0.0;
        v.conclusion_holds = cert_h.verdict && induced_ok;
        return v;
    }

    if (id == "quasi-single-vs-three") {
        require_class(0, QuasiKind::regular);
        require_semiconvergent(0);
        require_class(1, QuasiKind::type1);
        require_class(2, QuasiKind::type1);
        for (std::size_t i = 0; i < splits.size(); ++i) require_index_i_minus("T_" + split_name(i, splits.size()), ts[i]);
        require_index_i_minus("H", h);
        log.finish();
        const double g_x = v.measured["gamma_X"];
        v.conclusion_holds = cert_h.gamma <= g_x + kConclusionSlack && g_x < 1.0;
        return v;
    }

    // quasi-comparison and quasi-two-vs-three share the three-quasi-regular hypotheses
    for (std::size_t i = 0; i < splits.size(); ++i) {
        require_class(i, QuasiKind::regular);
        require_semiconvergent(i);
        require_index_i_minus("T_" + split_name(i, splits.size()), ts[i]);
    }
    require_index_i_minus("H", h);

    double bound = std::numeric_limits<double>::infinity();
    if (id == "quasi-comparison") {
        for (std::size_t i = 0; i < splits.size(); ++i) bound = std::min(bound, v.measured["gamma_" + split_name(i, 3)]);
    } else {
        const auto pairs = pair_matrices(splits, tol);
        const std::array<std::array<int, 2>, 3> members{{{0, 1}, {0, 2}, {1, 2}}};
        for (int p = 0; p < 3; ++p) {
            const std::string name = std::string("H") + kPairNames[p];
            const double g = gamma(pairs[p], tol);
            v.measured["gamma_" + name] = g;
            bound = std::min(bound, g);
            require_index_i_minus(name, pairs[p]);
            const std::array<Splitting, 2> pair{splits[members[p][0]], splits[members[p][1]]};
            try {
                const Splitting bij = core_induced_splitting(pair, tol);
                log.require(bij.u_is_nonsingular() && classify(bij, tol).is_quasi_regular,
                            std::string("B") + kPairNames[p] + " is not quasi regular");
            } catch (const Error& e) {
                log.require(false, std::string("B") + kPairNames[p] + " does not exist (" + e.what() + ")");
            }
        }
        try {
            const Splitting b = core_induced_splitting(splits, tol);
            log.require(b.u_is_nonsingular() && classify(b, tol).is_quasi_regular, "B is not quasi regular");
        } catch (const Error& e) {
            log.require(false, std::string("B does not exist (") + e.what() + ")");
        }
    }
    log.finish();
    v.measured["bound"] = bound;
    v.conclusion_holds = cert_h.gamma <= bound + kConclusionSlack && bound < 1.0;
    return v;
}

}  // namespace

TheoremVerdict verify_convergence_theorem(const std::string& theorem_id, std::span<const Splitting> splits,
                                          const ToleranceProfile& tol) {
    const auto& ids = convergence_theorem_ids();
    if (std::find(ids.begin(), ids.end(), theorem_id) == ids.end()) {
        throw UnknownTheoremId("unknown convergence theorem '" + theorem_id + "'");
    }
    require_common_a(splits, tol);
    if (theorem_id == "typeII-convergence") {
        require_count(splits, 1, 3, theorem_id);
        TheoremVerdict v;
        v.theorem_id = theorem_id;
        HypothesisLog log{v};
        for (std::size_t i = 0; i < splits.size(); ++i) {
            const auto report = classify(splits[i], tol);
            if (!report.is_g_weak_regular_type2) {
                log.require(false, split_name(i, splits.size()) + " is not proper G-weak regular type II (" +
                                       report.reason_for("g_weak_regular_type2") + ")");
            }
        }
        group_monotone_sharp(splits.front().a(), log, tol);
        log.finish();
        const double rho_h = spectral_radius(alternating_iteration_matrix(splits, tol));
        v.measured["rho_H"] = rho_h;
        v.measured["rho_S"] = spectral_radius(companion_matrix(splits, tol));
        v.conclusion_holds = rho_h < 1.0;
        return v;
    }
    require_count(splits, 3, 3, theorem_id);
    return convergence_comparison(theorem_id, splits, theorem_id == "both-types-comparison", tol);
}

TheoremVerdict verify_semiconvergence_theorem(const std::string& theorem_id, std::span<const Splitting> splits,
                                              const ToleranceProfile& tol, std::optional<double> delta) {
    const auto& ids = semiconvergence_theorem_ids();
    if (std::find(ids.begin(), ids.end(), theorem_id) == ids.end()) {
        throw UnknownTheoremId("unknown semiconvergence theorem '" + theorem_id + "'");
    }
    if (theorem_id == "delta-shift") {
        if (!delta) throw MissingDelta("delta-shift needs delta");
        if (!(*delta > 0.0 && *delta < 1.0)) throw InvalidArgument("delta must lie strictly inside (0,1)");
    }
    require_common_a(splits, tol);
    require_count(splits, 3, 3, theorem_id);
    if (theorem_id == "regular-semiconvergence" || theorem_id == "delta-shift" || theorem_id == "induced-regular") {
        return regular_family(theorem_id, splits, tol, delta);
    }
    return quasi_family(theorem_id, splits, tol);
}

namespace {

// Largest t with G x + t <= h, t <= 1, x free. Dense tableau simplex with
// Bland's rule; small problems only.
struct MarginLp {
    double t = -std::numeric_limits<double>::infinity();
    Vector x;
};

MarginLp max_margin(const Matrix& g, const Vector& h) {
    const Index m = g.rows();
    const Index n = g.cols();
    const double shift = std::max(0.0, -h.minCoeff()) + 1.0;  // t = tau - shift
    // columns: x+ (n), x- (n), tau, slacks (m + 1); rows: m constraints + tau bound
    const Index nv = 2 * n + 1 + m + 1;
    const Index rows = m + 1;
    Matrix tab = Matrix::Zero(rows + 1, nv + 1);
    for (Index i = 0; i < m; ++i) {
        tab.block(i, 0, 1, n) = g.row(i);
        tab.block(i, n, 1, n) = -g.row(i);
        tab(i, 2 * n) = 1.0;
        tab(i, 2 * n + 1 + i) = 1.0;
        tab(i, nv) = h(i) + shift;
    }
    tab(m, 2 * n) = 1.0;
    tab(m, 2 * n + 1 + m) = 1.0;
    tab(m, nv) = shift + 1.0;
    tab(rows, 2 * n) = -1.0;  // objective row: maximize tau
    std::vector<Index> basis(rows);
    for (Index i = 0; i < rows; ++i) basis[i] = 2 * n + 1 + i;

    constexpr double eps = 1e-12;
    for (int it = 0; it < 10000; ++it) {
        Index col = -1;
        for (Index j = 0; j < nv; ++j)
            if (tab(rows, j) < -eps) {
                col = j;
                break;
            }
        if (col < 0) break;
        Index row = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Index i = 0; i < rows; ++i) {
            if (tab(i, col) <= eps) continue;
            const double ratio = tab(i, nv) / tab(i, col);
            if (ratio < best - eps || (ratio <= best + eps && row >= 0 && basis[i] < basis[row])) {
                best = ratio;
                row = i;
            }
        }
        if (row < 0) break;  // cannot happen: tau is bounded
        tab.row(row) /= tab(row, col);
        for (Index i = 0; i <= rows; ++i)
            if (i != row && tab(i, col) != 0.0) tab.row(i) -= tab(i, col) * tab.row(row);
        basis[row] = col;
    }
    Vector z = Vector::Zero(nv);
    for (Index i = 0; i < rows; ++i) z(basis[i]) = tab(i, nv);
    MarginLp out;
    out.x = z.head(n) - z.segment(n, n);
    out.t = z(2 * n) - shift;
    return out;
}

// Every B with B(I - H) = A is B0 + y w^T, w^T (I - H) = 0, when I - H has
// nullity one. With P = B0^-1 and r = P^T w the conditions C >= 0 and
// B^-1 = P - (P y) r^T / (1 + r^T y) >= 0 are linear in y.
std::optional<Splitting> search_regular_family(const Splitting& b0, const Matrix& h, const ToleranceProfile& tol) {
    const Index n = h.rows();
    Eigen::FullPivLU<Matrix> lu(Matrix(Matrix::Identity(n, n) - h).transpose());
    lu.setThreshold(tol.rank_tol);
    if (lu.dimensionOfKernel() != 1) return std::nullopt;
    Vector w = lu.kernel().col(0);
    w /= w.cwiseAbs().maxCoeff();

    const Matrix p = b0.solver().solve(Matrix(Matrix::Identity(n, n)));
    const Matrix c0 = b0.v();
    const Vector r = p.transpose() * w;
    const double scale_c = std::max(1.0, max_abs(c0));
    const double scale_p = std::max(1.0, max_abs(p));

    Matrix g(2 * n * n + 1, n);
    Vector rhs(2 * n * n + 1);
    Index k = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            // -(c0_ij + y_i w_j) <= 0
            g.row(k).setZero();
            g(k, i) = -w(j) / scale_c;
            rhs(k++) = c0(i, j) / scale_c;
            // -(p_ij (1 + r^T y) - (P y)_i r_j) <= 0
            g.row(k) = (-(p(i, j) * r.transpose()) + r(j) * p.row(i)) / scale_p;
            rhs(k++) = p(i, j) / scale_p;
        }
    g.row(k) = -r.transpose();  // 1 + r^T y stays positive
    rhs(k) = 1.0;
    const MarginLp lp = max_margin(g, rhs);
    if (!(lp.t >= -tol.nonneg_tol)) return std::nullopt;

    const Matrix b = b0.u() + lp.x * w.transpose();
    try {
        Splitting cand = make_splitting(b0.a(), b, tol);
        if (classify(cand, tol).is_regular) return cand;
    } catch (const Error&) {
    }
    return std::nullopt;
}

}  // namespace

std::optional<Splitting> find_regular_induced_splitting(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    Splitting b0 = core_induced_splitting(splits, tol);
    if (classify(b0, tol).is_regular) return b0;
    return search_regular_family(b0, alternating_iteration_matrix(splits, tol), tol);
}

Splitting induced_regular_splitting(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    require_common_a(splits, tol);
    require_count(splits, 3, 3, "induced_regular_splitting");
    for (std::size_t i = 0; i < splits.size(); ++i) {
        const auto report = classify(splits[i], tol);
        if (!report.is_regular) {
            throw ClassificationFailed(split_name(i, 3) + " is not a regular splitting (" + report.reason_for("regular") + ")");
        }
    }
    if (!core_nonsingular(splits, tol)) throw NonsingularityHypothesisFailed("K + X - A + YU^-1L is singular");
    auto b = find_regular_induced_splitting(splits, tol);
    if (!b) {
        const auto report = classify(core_induced_splitting(splits, tol), tol);
        throw ClassificationFailed("no regular induced splitting found (" + report.reason_for("regular") + ")");
    }
    return *b;
}

}  // namespace altsplit
