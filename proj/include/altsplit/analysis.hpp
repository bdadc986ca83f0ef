#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altsplit/splittings.hpp"

namespace altsplit {

struct SemiconvergenceCertificate {
    double rho = 0.0;
    double gamma = 0.0;
    bool has_eigenvalue_one = false;
    int index_of_I_minus_T = 0;  ///< 0 if I - T is nonsingular, 1, or 2 meaning "greater than one"
    bool verdict = false;
    std::optional<Matrix> limit_matrix;  ///< lim T^k, present only when verdict holds
};

/// rho(T) <= 1 + one_tol, gamma(T) < 1 and index(I - T) <= 1.
SemiconvergenceCertificate is_semiconvergent(const Matrix& t, const ToleranceProfile& tol = {});

/// Brute-force lim T^k by repeated squaring, independent of the spectral
/// test. Returns nullopt when the powers do not settle within 2^k_max.
std::optional<Matrix> power_limit_oracle(const Matrix& t, int k_max = 40, const ToleranceProfile& tol = {});

/// Nonpositive off-diagonals and s^-1 (sI - A) semiconvergent for
/// s = 2 max_i a_ii.
bool is_m_matrix_with_property_c(const Matrix& a, const ToleranceProfile& tol = {});

/// delta H + (1 - delta) I.
Matrix shifted_matrix(const Matrix& h, double delta);

struct TheoremVerdict {
    std::string theorem_id;
    bool hypotheses_hold = false;
    std::vector<std::string> hypothesis_failures;
    bool conclusion_holds = false;
    std::map<std::string, double> measured;

    /// Hypotheses hold but the conclusion does not.
    bool is_counterexample() const { return hypotheses_hold && !conclusion_holds; }
};

/// Slack applied to every inequality in a theorem conclusion.
inline constexpr double kConclusionSlack = 1e-10;

/// Convergence theorems for proper splittings of index-one systems.
/// Ids: typeII-convergence, single-vs-three, both-types-comparison,
/// two-vs-three.
TheoremVerdict verify_convergence_theorem(const std::string& theorem_id, std::span<const Splitting> splits,
                                          const ToleranceProfile& tol = {});

/// Semiconvergence theorems for splittings with nonsingular U of a singular
/// A. Ids: regular-semiconvergence, delta-shift, induced-regular,
/// quasi-three-step, quasi-single-vs-three, quasi-comparison,
/// quasi-two-vs-three. delta-shift throws MissingDelta without delta.
TheoremVerdict verify_semiconvergence_theorem(const std::string& theorem_id, std::span<const Splitting> splits,
                                              const ToleranceProfile& tol = {},
                                              std::optional<double> delta = std::nullopt);

const std::vector<std::string>& convergence_theorem_ids();
const std::vector<std::string>& semiconvergence_theorem_ids();

/// A regular splitting A = B - C with B^-1 C = H for three regular
/// splittings, or nullopt if none exists. Tries B0 = K M^-1 X first; for
/// singular A every candidate has the form B0 + y w^T with w^T (I - H) = 0,
/// and a small linear program over y decides existence.
std::optional<Splitting> find_regular_induced_splitting(std::span<const Splitting> splits,
                                                        const ToleranceProfile& tol = {});

/// The splitting from find_regular_induced_splitting. Throws
/// ClassificationFailed if an input splitting is not regular or no regular
/// induced splitting exists, NonsingularityHypothesisFailed if the core
/// matrix is singular.
Splitting induced_regular_splitting(std::span<const Splitting> splits, const ToleranceProfile& tol = {});

}  // namespace altsplit
