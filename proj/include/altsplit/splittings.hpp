#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "altsplit/dense_core.hpp"

namespace altsplit {

/// A splitting A = U - V. V is always derived as U - A, and the solver for U
/// (inverse or group inverse) is built once at construction.
class Splitting {
public:
    const Matrix& a() const { return a_; }
    const Matrix& u() const { return u_; }
    const Matrix& v() const { return v_; }
    Index size() const { return a_.rows(); }

    bool u_is_nonsingular() const { return solver_->nonsingular(); }
    const GeneralizedSolver& solver() const { return *solver_; }

    /// U^-1 or U#.
    Matrix u_sharp() const { return solver_->inverse(); }
    /// U#V, the one-step iteration matrix.
    Matrix iteration_matrix() const { return solver_->solve(v_); }
    /// VU#, the one-step companion factor.
    Matrix companion_factor() const { return solver_->right_solve(v_); }

    /// U#(V x + b): one sweep of the usual scheme.
    Vector sweep(const Vector& x, const Vector& b) const { return solver_->solve(Vector(v_ * x + b)); }

private:
    friend Splitting make_splitting(const Matrix&, const Matrix&, const ToleranceProfile&);
    Splitting(Matrix a, Matrix u, const ToleranceProfile& tol);

    Matrix a_;
    Matrix u_;
    Matrix v_;
    std::shared_ptr<const GeneralizedSolver> solver_;
};

/// Builds A = U - (U - A). Throws NotSquare/DimensionMismatch on shape errors
/// and IndexGreaterThanOne when U is singular without a group inverse.
Splitting make_splitting(const Matrix& a, const Matrix& u, const ToleranceProfile& tol = {});

/// U = alpha * diag(A). Throws ZeroDiagonal if diag(A) has a zero entry.
Splitting diag_scaling_splitting(const Matrix& a, double alpha, const ToleranceProfile& tol = {});

/// Reason attached to a false classification verdict.
struct ClassWitness {
    std::string verdict;  ///< e.g. "g_weak_regular_type2"
    std::string reason;   ///< e.g. "VU# has entry -1 at (1,1)"
};

struct SplittingClassReport {
    bool is_proper = false;
    bool is_g_regular = false;
    bool is_g_weak_regular_type1 = false;
    bool is_g_weak_regular_type2 = false;
    bool is_regular = false;
    bool is_weak_regular_type1 = false;
    bool is_weak_regular_type2 = false;
    bool is_quasi_regular = false;
    bool is_quasi_weak_regular_type1 = false;
    bool is_quasi_weak_regular_type2 = false;
    std::vector<ClassWitness> witnesses;

    /// Witness text for a verdict name, empty if the verdict holds.
    std::string reason_for(const std::string& verdict) const;
};

/// Evaluates all ten class predicates. Never throws on a failed predicate.
SplittingClassReport classify(const Splitting& s, const ToleranceProfile& tol = {});

/// Human-readable rendering of a report, one verdict per line.
std::string format_report(const SplittingClassReport& report);

/// Throws MismatchedA unless every splitting splits the same A, and
/// InvalidArgument unless there are between 1 and 3 of them.
void require_common_a(std::span<const Splitting> splits, const ToleranceProfile& tol = {});

/// H for the alternating scheme whose sweeps apply splits[0], splits[1], ...
/// in order: U2#V2 U1#V1 U0#V0 (for [K-L, U-V, X-Y] this is X#Y U#V K#L).
Matrix alternating_iteration_matrix(std::span<const Splitting> splits, const ToleranceProfile& tol = {});

/// S = V2U2# V1U1# V0U0# (for [K-L, U-V, X-Y] this is YX# VU# LK#).
Matrix companion_matrix(std::span<const Splitting> splits, const ToleranceProfile& tol = {});

/// The splitting A = B - C with B = A (I - H)^-1, so that B#C = H.
/// Throws SingularIminusH if I - H is singular.
Splitting induced_splitting(const Matrix& a, const Matrix& h, const ToleranceProfile& tol = {});

/// Core matrix of the induced splitting: K + X - A + Y U# L for three
/// splittings [K, U, X], U + X - A for two splittings [U, X].
Matrix induced_core(std::span<const Splitting> splits, const ToleranceProfile& tol = {});

/// B = K M# X with M the induced core (B = U M# X for two splittings, B = U
/// for one). Equals A (I - H)^-1 whenever I - H is nonsingular and, unlike
/// that form, also applies when H has the eigenvalue 1. Throws
/// RangeNullConditionFailed when M is singular without the range and null
/// space of A.
Splitting core_induced_splitting(std::span<const Splitting> splits, const ToleranceProfile& tol = {});

/// B# = X# (K + X - A + Y U# L) K# for exactly three splittings. Throws
/// RangeNullConditionFailed unless the core matrix has the range and null
/// space of A.
Matrix b_sharp_closed_form(std::span<const Splitting> splits, const ToleranceProfile& tol = {});

}  // namespace altsplit
