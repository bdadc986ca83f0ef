#pragma once

#include <Eigen/Dense>

#include <optional>

#include "altsplit/errors.hpp"

namespace altsplit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Numerical slack used wherever exact-arithmetic predicates are evaluated in
/// floating point.
struct ToleranceProfile {
    double rank_tol = 1e-10;    ///< relative singular-value cutoff
    double eq_tol = 1e-9;       ///< entrywise matrix-equality slack
    double one_tol = 1e-8;      ///< |lambda - 1| cutoff for "eigenvalue equals 1"
    double nonneg_tol = 1e-12;  ///< entries >= -nonneg_tol count as nonnegative

    /// Throws InvalidArgument if any field is negative or not finite.
    void validate() const;
};

/// Position and value of a single matrix entry, used as a witness for a
/// failed nonnegativity test.
struct EntryWitness {
    Index row = 0;
    Index col = 0;
    double value = 0.0;
};

// ---- argument checks --------------------------------------------------------

void require_square(const Matrix& m, const char* what);
void require_finite(const Matrix& m, const char* what);
void require_finite(const Vector& v, const char* what);

// ---- norms / comparisons ----------------------------------------------------

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const Matrix& m);

/// max |a_ij - b_ij|.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// True iff max |a_ij - b_ij| <= eq_tol * max(1, max|a|, max|b|).
bool approx_equal(const Matrix& a, const Matrix& b, const ToleranceProfile& tol = {});

bool is_diagonal(const Matrix& m);

// ---- spectral quantities ----------------------------------------------------

/// Singular values in decreasing order.
Vector singular_values(const Matrix& m);

/// Number of singular values above rank_tol * max(sigma_max, scale). A
/// positive scale keeps a matrix of pure rounding noise at rank 0.
Index rank(const Matrix& m, const ToleranceProfile& tol = {}, double scale = 0.0);

/// All eigenvalues from a full dense decomposition. Matrices that are
/// symmetric up to rounding go through the symmetric solver.
ComplexVector eigenvalues(const Matrix& m);

double spectral_radius(const Matrix& m);

/// Largest |lambda| over eigenvalues with |lambda - 1| > one_tol; 0 if none.
double gamma(const Matrix& m, const ToleranceProfile& tol = {});

// ---- generalized inverses ---------------------------------------------------

/// Group inverse through a rank factorization M = F G taken from a
/// column-pivoted QR: M# = F (G F)^-2 G. Throws IndexGreaterThanOne when
/// G F is singular. `scale` as for rank().
Matrix group_inverse(const Matrix& m, const ToleranceProfile& tol = {}, double scale = 0.0);

/// rank(M) == rank(M^2) and G F well conditioned.
bool index_at_most_one(const Matrix& m, const ToleranceProfile& tol = {}, double scale = 0.0);

/// Orthogonal projector onto R(M).
Matrix range_projector(const Matrix& m, const ToleranceProfile& tol = {});
/// Orthogonal projector onto N(M).
Matrix null_projector(const Matrix& m, const ToleranceProfile& tol = {});

bool same_range(const Matrix& m, const Matrix& n, const ToleranceProfile& tol = {});
bool same_null(const Matrix& m, const Matrix& n, const ToleranceProfile& tol = {});

// ---- sign tests -------------------------------------------------------------

bool is_nonnegative(const Matrix& m, const ToleranceProfile& tol = {});

/// Most negative entry of m (the minimum).
EntryWitness most_negative_entry(const Matrix& m);

// ---- solves -----------------------------------------------------------------

/// Applies M^-1 when M is nonsingular at rank_tol and M# otherwise.
///
/// The factorization is built once in the constructor: a diagonal scaling
/// for nonsingular diagonal M, a partially pivoted LU for other nonsingular
/// M, and the explicit group inverse for singular M. All member functions
/// are const and safe to call concurrently.
class GeneralizedSolver {
public:
    GeneralizedSolver(const Matrix& m, const ToleranceProfile& tol = {});

    Index size() const { return n_; }
    bool nonsingular() const { return kind_ != Kind::group_inverse; }

    /// M^-1 b or M# b.
    Vector solve(const Vector& b) const;
    /// M^-1 B or M# B.
    Matrix solve(const Matrix& b) const;
    /// B M^-1 or B M#.
    Matrix right_solve(const Matrix& b) const;
    /// The explicit inverse (or group inverse).
    Matrix inverse() const;

private:
    enum class Kind { diagonal, lu, group_inverse };

    Index n_ = 0;
    Kind kind_ = Kind::lu;
    Vector diag_inv_;
    Eigen::PartialPivLU<Matrix> lu_;
    Eigen::PartialPivLU<Matrix> lu_t_;  // of M^T, for right solves
    Matrix sharp_;
};

/// Convenience wrapper: GeneralizedSolver(m, tol).solve(b).
Vector gen_solve(const Matrix& m, const Vector& b, const ToleranceProfile& tol = {});

}  // namespace altsplit
