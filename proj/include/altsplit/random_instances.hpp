#pragma once

#include <random>
#include <string>
#include <vector>

#include "altsplit/splittings.hpp"

namespace altsplit {

using Rng = std::mt19937_64;

/// Random orthogonal-times-diagonal-times-orthogonal matrix with singular
/// values in [1, 3].
Matrix random_well_conditioned(Rng& rng, Index n);

/// Index-one matrix P diag(C, 0) P^-1 of the given rank; C has singular
/// values in [0.5, 2]. rank 0 gives the zero matrix.
Matrix random_index_one(Rng& rng, Index n, Index rank);

struct SplittingInstance {
    std::string family;
    Matrix a;
    std::vector<Splitting> splits;
};

/// Three proper splittings sharing a block structure with A: A, K, U, X all
/// equal P diag(C_*, 0) P^-1. Rejects draws whose induced core or I - H is
/// badly conditioned, so the instance satisfies the induced-splitting
/// hypotheses.
SplittingInstance random_proper_triple(Rng& rng, Index n, Index rank);

/// Group monotone A = G# with G = F M H >= 0 and three proper splittings
/// with U# = G - c G W G >= 0. both_types = true uses disjoint block
/// supports (so AA# >= 0) and W >= 0, which makes every splitting G-weak
/// regular of both types; otherwise W = G Q and only type II is guaranteed.
/// rank == n gives a nonsingular monotone A.
SplittingInstance random_group_monotone_triple(Rng& rng, Index n, Index rank, bool both_types);

/// Nonsingular M-matrix with three regular splittings U = alpha D - N_U,
/// alpha >= 1, N_U a masked part of the off-diagonal. diagonal_only drops
/// the off-diagonal part.
SplittingInstance random_m_matrix_triple(Rng& rng, Index n, bool diagonal_only);

/// Irreducible singular M-matrix A = D - N with A x = 0 for a positive x,
/// plus three regular splittings as above.
SplittingInstance random_singular_m_matrix_triple(Rng& rng, Index n, bool diagonal_only);

/// Three quasi-regular splittings of a singular index-one A (n >= 3) whose
/// iteration matrices are semiconvergent. A = U K1 - N with N >= 0, so that
/// V K1 = N; the three U differ by diagonal shifts that leave K1 unchanged.
SplittingInstance random_quasi_regular_triple(Rng& rng, Index n);

enum class IterationKind { convergent, semiconvergent, divergent, jordan_at_one, unit_circle, stochastic };

inline constexpr IterationKind kAllIterationKinds[] = {
    IterationKind::convergent, IterationKind::semiconvergent, IterationKind::divergent,
    IterationKind::jordan_at_one, IterationKind::unit_circle, IterationKind::stochastic};

const char* to_string(IterationKind kind);

/// Test matrix for the semiconvergence oracle with a prescribed spectral
/// character. jordan_at_one needs n >= 2.
Matrix random_iteration_matrix(Rng& rng, Index n, IterationKind kind);

}  // namespace altsplit
