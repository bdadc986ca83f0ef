#include "altsplit/bench.hpp"

#include <iomanip>
#include <ostream>

#include "altsplit/problems.hpp"

namespace altsplit {

StartVector parse_start_vector(const std::string& name) {
    if (name == "zero") return StartVector::zero;
    if (name == "uniform") return StartVector::uniform;
    if (name == "e1") return StartVector::e1;
    throw InvalidArgument("unknown start vector '" + name + "' (expected zero, uniform or e1)");
}

Vector make_start_vector(StartVector kind, Index n) {
    switch (kind) {
        case StartVector::zero: return Vector::Zero(n);
        case StartVector::uniform: return Vector::Constant(n, 1.0 / static_cast<double>(n));
        case StartVector::e1: return Vector::Unit(n, 0);
    }
    return {};
}

BenchOptions laplace_defaults() {
    BenchOptions o;
    o.alphas = {1.0, 1.5, 1.75};
    o.tolerance = 1e-6;
    o.stop_rule = StopRule::error_vs_exact;
    o.start = StartVector::zero;
    return o;
}

BenchOptions markov_defaults() {
    BenchOptions o;
    o.alphas = {2.0, 2.5, 3.0};
    o.tolerance = 1e-7;
    o.stop_rule = StopRule::residual;
    o.start = StartVector::e1;
    return o;
}

namespace {

struct Scheme {
    const char* name;
    std::vector<Splitting> splits;
};

std::vector<Scheme> schemes_for(const Matrix& a, const BenchOptions& opts) {
    if (opts.alphas.size() != 3) throw InvalidArgument("bench needs exactly three alphas");
    std::vector<Splitting> all;
    for (double al : opts.alphas) all.push_back(diag_scaling_splitting(a, al));
    const double single = opts.single_alpha.value_or(opts.alphas[0]);
    return {{"three", all},
            {"two", {all[0], all[1]}},
            {"single", {diag_scaling_splitting(a, single)}}};
}

std::vector<BenchRow> run_bench(const Matrix& a, const Vector& b, const std::optional<Vector>& exact,
                                const BenchOptions& opts, bool singular) {
    if (opts.stop_rule == StopRule::error_vs_exact && !exact) {
        throw InvalidArgument("the error stop rule needs a known solution");
    }
    std::vector<BenchRow> rows;
    const Vector x0 = make_start_vector(opts.start, a.rows());
    for (auto& scheme : schemes_for(a, opts)) {
        SchemeConfig cfg;
        cfg.splittings = scheme.splits;
        cfg.stop_rule = opts.stop_rule;
        cfg.tolerance = opts.tolerance;
        cfg.max_iterations = opts.max_iterations;
        const IterationReport rep = run(cfg, b, x0, exact);

        BenchRow row;
        row.order = a.rows();
        row.scheme = scheme.name;
        row.iterations = rep.iterations;
        row.residual = rep.final_residual;
        row.error = rep.final_error;
        row.time_s = rep.elapsed_seconds;
        row.converged = rep.converged;
        const Matrix h = alternating_iteration_matrix(scheme.splits);
        row.rho_or_gamma = singular ? gamma(h) : spectral_radius(h);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::vector<BenchRow> bench_laplace(int grid, const BenchOptions& opts) {
    const LaplaceProblem p = make_laplace(grid);
    return run_bench(p.a, p.b, p.exact, opts, false);
}

std::vector<BenchRow> bench_markov(int states, const BenchOptions& opts) {
    const RandomWalkProblem p = make_random_walk(states);
    return run_bench(p.a, Vector::Zero(p.a.rows()), std::nullopt, opts, true);
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kBenchCsvHeader << '\n';
    out << std::setprecision(10);
    for (const auto& r : rows) {
        out << r.order << ',' << r.scheme << ',' << r.iterations << ',' << r.residual << ',';
        if (r.error) out << *r.error;
        out << ',' << r.time_s << ',' << r.rho_or_gamma << '\n';
    }
}

void print_bench_table(std::ostream& out, const std::vector<BenchRow>& rows, const std::string& metric) {
    const auto flags = out.flags();
    out << std::left << std::setw(7) << "Order" << std::setw(8) << "Scheme" << std::right << std::setw(9) << "IT"
        << std::setw(14) << "||b-Ax||_2" << std::setw(14) << "||x*-x||_2" << std::setw(12) << "Time(s)"
        << std::setw(9) << metric << '\n';
    for (const auto& r : rows) {
        out << std::left << std::setw(7) << r.order << std::setw(8) << r.scheme << std::right << std::setw(9)
            << r.iterations << std::scientific << std::setprecision(4) << std::setw(14) << r.residual;
        if (r.error) {
            out << std::setw(14) << *r.error;
        } else {
            out << std::setw(14) << "-";
        }
        out << std::fixed << std::setprecision(6) << std::setw(12) << r.time_s << std::setprecision(4)
            << std::setw(9) << r.rho_or_gamma;
        if (!r.converged) out << "  (not converged)";
        out << '\n';
        out.flags(flags);
    }
}

}  // namespace altsplit
