#include "altsplit/splittings.hpp"

#include <sstream>

namespace altsplit {

namespace {

std::string entry_reason(const std::string& name, const Matrix& m) {
    const EntryWitness w = most_negative_entry(m);
    std::ostringstream os;
    os << name << " has entry " << w.value << " at (" << w.row + 1 << "," << w.col + 1 << ")";
    return os.str();
}

}  // namespace

Splitting::Splitting(Matrix a, Matrix u, const ToleranceProfile& tol)
    : a_(std::move(a)), u_(std::move(u)), v_(u_ - a_),
      solver_(std::make_shared<const GeneralizedSolver>(u_, tol)) {}

Splitting make_splitting(const Matrix& a, const Matrix& u, const ToleranceProfile& tol) {
    require_square(a, "A");
    require_square(u, "U");
    if (a.rows() != u.rows()) {
        throw DimensionMismatch("A is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " but U is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()));
    }
    require_finite(a, "A");
    require_finite(u, "U");
    return Splitting(a, u, tol);
}

Splitting diag_scaling_splitting(const Matrix& a, double alpha, const ToleranceProfile& tol) {
    require_square(a, "A");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha must be positive");
    for (Index i = 0; i < a.rows(); ++i) {
        if (a(i, i) == 0.0) {
            throw ZeroDiagonal("diag(A) has a zero at position " + std::to_string(i + 1));
        }
    }
    return make_splitting(a, Matrix((alpha * a.diagonal()).asDiagonal()), tol);
}

std::string SplittingClassReport::reason_for(const std::string& verdict) const {
    for (const auto& w : witnesses)
        if (w.verdict == verdict) return w.reason;
    return {};
}

SplittingClassReport classify(const Splitting& s, const ToleranceProfile& tol) {
    SplittingClassReport r;
    auto fail = [&r](const char* verdict, std::string reason) {
        r.witnesses.push_back({verdict, std::move(reason)});
    };

    const Matrix& a = s.a();
    const Matrix& u = s.u();
    const Matrix& v = s.v();
    const Index n = s.size();
    const Matrix id = Matrix::Identity(n, n);

    const bool range_ok = same_range(u, a, tol);
    const bool null_ok = same_null(u, a, tol);
    r.is_proper = range_ok && null_ok;
    std::string proper_reason;
    if (!range_ok) proper_reason = "R(U) != R(A)";
    if (!null_ok) proper_reason += std::string(proper_reason.empty() ? "" : "; ") + "N(U) != N(A)";
    if (!r.is_proper) fail("proper", proper_reason);

    const Matrix u_sharp = s.u_sharp();
    const Matrix u_sharp_v = s.iteration_matrix();
    const Matrix v_u_sharp = s.companion_factor();
    const bool u_sharp_nonneg = is_nonnegative(u_sharp, tol);
    const bool v_nonneg = is_nonnegative(v, tol);
    const bool usv_nonneg = is_nonnegative(u_sharp_v, tol);
    const bool vus_nonneg = is_nonnegative(v_u_sharp, tol);

    // Shared reason for the three members of a class family.
    auto family_reason = [&](bool base_ok, const std::string& base_reason, const char* sharp_name,
                             bool product_ok, const std::string& product_name, const Matrix& product) {
        if (!base_ok) return base_reason;
        if (!u_sharp_nonneg) return entry_reason(sharp_name, u_sharp);
        if (!product_ok) return entry_reason(product_name, product);
        return std::string();
    };

    // proper G-classes
    r.is_g_regular = r.is_proper && u_sharp_nonneg && v_nonneg;
    r.is_g_weak_regular_type1 = r.is_g_regular || (r.is_proper && u_sharp_nonneg && usv_nonneg);
    r.is_g_weak_regular_type2 = r.is_g_regular || (r.is_proper && u_sharp_nonneg && vus_nonneg);
    const std::string not_proper = "splitting is not proper (" + proper_reason + ")";
    if (!r.is_g_regular) fail("g_regular", family_reason(r.is_proper, not_proper, "U#", v_nonneg, "V", v));
    if (!r.is_g_weak_regular_type1)
        fail("g_weak_regular_type1", family_reason(r.is_proper, not_proper, "U#", usv_nonneg, "U#V", u_sharp_v));
    if (!r.is_g_weak_regular_type2)
        fail("g_weak_regular_type2", family_reason(r.is_proper, not_proper, "U#", vus_nonneg, "VU#", v_u_sharp));

    // plain classes (U nonsingular)
    const bool nonsingular = s.u_is_nonsingular();
    const std::string singular_u = "U is singular";
    r.is_regular = nonsingular && u_sharp_nonneg && v_nonneg;
    r.is_weak_regular_type1 = r.is_regular || (nonsingular && u_sharp_nonneg && usv_nonneg);
    r.is_weak_regular_type2 = r.is_regular || (nonsingular && u_sharp_nonneg && vus_nonneg);
    if (!r.is_regular) fail("regular", family_reason(nonsingular, singular_u, "U^-1", v_nonneg, "V", v));
    if (!r.is_weak_regular_type1)
        fail("weak_regular_type1", family_reason(nonsingular, singular_u, "U^-1", usv_nonneg, "U^-1V", u_sharp_v));
    if (!r.is_weak_regular_type2)
        fail("weak_regular_type2", family_reason(nonsingular, singular_u, "U^-1", vus_nonneg, "VU^-1", v_u_sharp));

    // quasi classes: nonnegativity after removing the unit-eigenvalue part
    if (!nonsingular) {
        fail("quasi_regular", singular_u);
        fail("quasi_weak_regular_type1", singular_u);
        fail("quasi_weak_regular_type2", singular_u);
        return r;
    }
    const Matrix i_minus_t = id - u_sharp_v;
    const Matrix i_minus_vu = id - v_u_sharp;
    const bool index1_t = index_at_most_one(i_minus_t, tol);
    const bool index1_vu = index_at_most_one(i_minus_vu, tol);
    if (!index1_t || !index1_vu) {
        const std::string why = !index1_t ? "index(I - U^-1V) > 1" : "index(I - VU^-1) > 1";
        fail("quasi_regular", why);
        fail("quasi_weak_regular_type1", why);
        fail("quasi_weak_regular_type2", why);
        return r;
    }
    const Matrix k1 = i_minus_t * group_inverse(i_minus_t, tol);
    const Matrix k2 = group_inverse(i_minus_vu, tol) * i_minus_vu;
    const Matrix vk1 = v * k1;
    const Matrix tk1 = u_sharp_v * k1;
    const Matrix k2vu = k2 * v_u_sharp;
    r.is_quasi_regular = u_sharp_nonneg && is_nonnegative(vk1, tol);
    r.is_quasi_weak_regular_type1 = u_sharp_nonneg && is_nonnegative(tk1, tol);
    r.is_quasi_weak_regular_type2 = u_sharp_nonneg && is_nonnegative(k2vu, tol);
    auto quasi_reason = [&](const std::string& name, const Matrix& product) {
        return u_sharp_nonneg ? entry_reason(name, product) : entry_reason("U^-1", u_sharp);
    };
    if (!r.is_quasi_regular) fail("quasi_regular", quasi_reason("VK1", vk1));
    if (!r.is_quasi_weak_regular_type1) fail("quasi_weak_regular_type1", quasi_reason("U^-1VK1", tk1));
    if (!r.is_quasi_weak_regular_type2) fail("quasi_weak_regular_type2", quasi_reason("K2VU^-1", k2vu));
    return r;
}

std::string format_report(const SplittingClassReport& report) {
    std::ostringstream os;
    auto line = [&](const char* label, const char* key, bool verdict) {
        os << "  " << label << (verdict ? "yes" : "no");
        if (!verdict) {
            const std::string why = report.reason_for(key);
            if (!why.empty()) os << "  [" << why << "]";
        }
        os << '\n';
    };
    line("proper:                   ", "proper", report.is_proper);
    line("g_regular:                ", "g_regular", report.is_g_regular);
    line("g_weak_regular_type1:     ", "g_weak_regular_type1", report.is_g_weak_regular_type1);
    line("g_weak_regular_type2:     ", "g_weak_regular_type2", report.is_g_weak_regular_type2);
    line("regular:                  ", "regular", report.is_regular);
    line("weak_regular_type1:       ", "weak_regular_type1", report.is_weak_regular_type1);
    line("weak_regular_type2:       ", "weak_regular_type2", report.is_weak_regular_type2);
    line("quasi_regular:            ", "quasi_regular", report.is_quasi_regular);
    line("quasi_weak_regular_type1: ", "quasi_weak_regular_type1", report.is_quasi_weak_regular_type1);
    line("quasi_weak_regular_type2: ", "quasi_weak_regular_type2", report.is_quasi_weak_regular_type2);
    return os.str();
}

void require_common_a(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    if (splits.empty() || splits.size() > 3) {
        throw InvalidArgument("alternating schemes take between 1 and 3 splittings, got " +
                              std::to_string(splits.size()));
    }
    const Matrix& a = splits.front().a();
    for (std::size_t i = 1; i < splits.size(); ++i) {
        if (splits[i].size() != a.rows() || !approx_equal(splits[i].a(), a, tol)) {
            throw MismatchedA("splitting " + std::to_string(i + 1) + " splits a different matrix");
        }
    }
}

Matrix alternating_iteration_matrix(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    require_common_a(splits, tol);
    Matrix h = splits.front().iteration_matrix();
    for (std::size_t i = 1; i < splits.size(); ++i) h = splits[i].solver().solve(Matrix(splits[i].v() * h));
    return h;
}

Matrix companion_matrix(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    require_common_a(splits, tol);
    Matrix s = splits.front().companion_factor();
    for (std::size_t i = 1; i < splits.size(); ++i) s = splits[i].companion_factor() * s;
    return s;
}

Splitting induced_splitting(const Matrix& a, const Matrix& h, const ToleranceProfile& tol) {
    require_square(a, "A");
    require_square(h, "H");
    if (a.rows() != h.rows()) throw DimensionMismatch("A and H differ in size");
    const Index n = a.rows();
    const Matrix i_minus_h = Matrix::Identity(n, n) - h;
    if (rank(i_minus_h, tol) < n) throw SingularIminusH("I - H is singular; no induced splitting exists");
    // B (I - H) = A  <=>  (I - H)^T B^T = A^T
    const Matrix b = i_minus_h.transpose().partialPivLu().solve(a.transpose()).transpose();
    return make_splitting(a, b, tol);
}

Matrix induced_core(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    require_common_a(splits, tol);
    const Matrix& a = splits.front().a();
    if (splits.size() == 2) return splits[0].u() + splits[1].u() - a;
    if (splits.size() == 3) {
        const Splitting& k = splits[0];
        const Splitting& u = splits[1];
        const Splitting& x = splits[2];
        return k.u() + x.u() - a + x.v() * u.solver().solve(k.v());
    }
    throw InvalidArgument("induced core needs two or three splittings");
}

Splitting core_induced_splitting(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    require_common_a(splits, tol);
    if (splits.size() == 1) return splits.front();
    const Matrix core = induced_core(splits, tol);
    const Matrix& a = splits.front().a();
    if (rank(core, tol) < a.rows() && (!same_range(core, a, tol) || !same_null(core, a, tol))) {
        throw RangeNullConditionFailed("induced core is singular and does not share the range and null space of A");
    }
    const GeneralizedSolver core_solver(core, tol);
    const Matrix b = splits.front().u() * core_solver.solve(splits.back().u());
    return make_splitting(a, b, tol);
}

Matrix b_sharp_closed_form(std::span<const Splitting> splits, const ToleranceProfile& tol) {
    if (splits.size() != 3) throw InvalidArgument("closed form for B# needs exactly three splittings");
    const Matrix core = induced_core(splits, tol);
    const Matrix& a = splits.front().a();
    if (!same_range(core, a, tol) || !same_null(core, a, tol)) {
        throw RangeNullConditionFailed("K + X - A + YU#L does not share the range and null space of A");
    }
    return splits[2].solver().solve(splits[0].solver().right_solve(core));
}

}  // namespace altsplit
