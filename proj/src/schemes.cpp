#include "altsplit/schemes.hpp"

#include <chrono>
#include <cmath>

namespace altsplit {

const char* to_string(StopRule rule) {
    switch (rule) {
        case StopRule::residual: return "residual";
        case StopRule::error_vs_exact: return "error";
        case StopRule::successive_diff: return "diff";
    }
    return "?";
}

StopRule parse_stop_rule(const std::string& name) {
    if (name == "residual") return StopRule::residual;
    if (name == "error" || name == "error_vs_exact") return StopRule::error_vs_exact;
    if (name == "diff" || name == "successive_diff") return StopRule::successive_diff;
    throw InvalidArgument("unknown stop rule '" + name + "' (expected residual, error or diff)");
}

void SchemeConfig::validate(const ToleranceProfile& tol) const {
    if (splittings.empty() || splittings.size() > 3) {
        throw InvalidArgument("a scheme takes between 1 and 3 splittings");
    }
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw InvalidArgument("tolerance must be positive");
    if (max_iterations <= 0) throw InvalidArgument("max_iterations must be positive");
    if (delta && !(*delta > 0.0 && *delta < 1.0)) throw InvalidArgument("delta must lie strictly inside (0,1)");
    require_common_a(splittings, tol);
}

Vector sweep(std::span<const Splitting> splits, const Vector& x, const Vector& b) {
    Vector y = x;
    for (const auto& s : splits) y = s.sweep(y, b);
    return y;
}

namespace {

IterationReport iterate(const SchemeConfig& config, const Vector& b, const Vector& x0,
                        const std::optional<Vector>& exact, std::optional<double> delta) {
    config.validate();
    const Matrix& a = config.splittings.front().a();
    const Index n = a.rows();
    if (b.size() != n || x0.size() != n || (exact && exact->size() != n)) {
        throw DimensionMismatch("b, x0 and the exact solution must have length " + std::to_string(n));
    }
    require_finite(b, "b");
    require_finite(x0, "x0");
    if (config.stop_rule == StopRule::error_vs_exact && !exact) {
        throw InvalidArgument("the error stop rule needs an exact solution");
    }

    IterationReport report;
    Vector x = x0;
    Vector x_prev;
    double metric = 0.0;
    const auto start = std::chrono::steady_clock::now();
    while (report.iterations < config.max_iterations) {
        x_prev = x;
        Vector y = sweep(config.splittings, x, b);
        x = delta ? Vector(*delta * y + (1.0 - *delta) * x) : std::move(y);
        ++report.iterations;
        if (!x.allFinite()) break;

        std::optional<double> err;
        if (exact) err = (*exact - x).norm();
        const bool need_res = config.record_history || config.stop_rule == StopRule::residual;
        const double res = need_res ? (b - a * x).norm() : 0.0;
        if (config.record_history) report.history.push_back({res, err});

        switch (config.stop_rule) {
            case StopRule::residual: metric = res; break;
            case StopRule::error_vs_exact: metric = *err; break;
            case StopRule::successive_diff: metric = (x - x_prev).norm(); break;
        }
        if (metric < config.tolerance) {
            report.converged = true;
            break;
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    report.final_x = x;
    report.final_residual = (b - a * x).norm();
    if (exact) report.final_error = (*exact - x).norm();
    return report;
}

}  // namespace

IterationReport run(const SchemeConfig& config, const Vector& b, const Vector& x0, const std::optional<Vector>& exact) {
    return iterate(config, b, x0, exact, config.delta);
}

IterationReport run_shifted(const SchemeConfig& config, const Vector& b, const Vector& x0,
                            const std::optional<Vector>& exact) {
    if (!config.delta) throw MissingDelta("shifted scheme needs delta");
    return iterate(config, b, x0, exact, config.delta);
}

Vector exact_solution(const Matrix& a, const Vector& b, const ToleranceProfile& tol) {
    require_square(a, "A");
    if (b.size() != a.rows()) throw DimensionMismatch("b has the wrong length");
    return gen_solve(a, b, tol);
}

}  // namespace altsplit
