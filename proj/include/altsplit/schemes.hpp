#pragma once

#include <optional>
#include <span>
#include <vector>

#include "altsplit/splittings.hpp"

namespace altsplit {

enum class StopRule { residual, error_vs_exact, successive_diff };

const char* to_string(StopRule rule);
/// Accepts "residual", "error", "error_vs_exact", "diff", "successive_diff".
StopRule parse_stop_rule(const std::string& name);

struct SchemeConfig {
    std::vector<Splitting> splittings;  ///< applied in list order within one iteration
    StopRule stop_rule = StopRule::residual;
    double tolerance = 1e-6;
    long max_iterations = 100000;
    std::optional<double> delta;  ///< shift parameter in (0,1)
    bool record_history = false;

    /// Throws InvalidArgument on any violated field constraint, MismatchedA
    /// if the splittings split different matrices.
    void validate(const ToleranceProfile& tol = {}) const;
};

struct HistoryEntry {
    double residual = 0.0;
    std::optional<double> error;
};

struct IterationReport {
    long iterations = 0;
    Vector final_x;
    double final_residual = 0.0;          ///< ||b - A x||_2
    std::optional<double> final_error;    ///< ||x* - x||_2 when an exact solution is known
    double elapsed_seconds = 0.0;         ///< wall time of the iteration loop only
    bool converged = false;
    std::vector<HistoryEntry> history;
};

/// One pass: x <- U_i#(V_i x + b) for each splitting in order.
Vector sweep(std::span<const Splitting> splits, const Vector& x, const Vector& b);

/// Iterates until the stop-rule metric drops below the tolerance or the
/// iteration budget runs out. Uses the shifted update when config.delta is
/// set. A non-finite iterate ends the run with converged = false.
IterationReport run(const SchemeConfig& config, const Vector& b, const Vector& x0,
                    const std::optional<Vector>& exact = std::nullopt);

/// x <- delta * sweep(x) + (1 - delta) * x. Throws MissingDelta when
/// config.delta is absent.
IterationReport run_shifted(const SchemeConfig& config, const Vector& b, const Vector& x0,
                            const std::optional<Vector>& exact = std::nullopt);

/// A^-1 b for nonsingular A, A# b otherwise.
Vector exact_solution(const Matrix& a, const Vector& b, const ToleranceProfile& tol = {});

}  // namespace altsplit
