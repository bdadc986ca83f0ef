#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "altsplit/schemes.hpp"

namespace altsplit {

/// Initial vector choices for the benchmarks.
enum class StartVector { zero, uniform, e1 };

StartVector parse_start_vector(const std::string& name);
Vector make_start_vector(StartVector kind, Index n);

struct BenchRow {
    Index order = 0;
    std::string scheme;  ///< "three", "two" or "single"
    long iterations = 0;
    double residual = 0.0;
    std::optional<double> error;  ///< absent for the singular benchmark
    double time_s = 0.0;
    double rho_or_gamma = 0.0;  ///< rho for the nonsingular benchmark, gamma for the singular one
    bool converged = false;
};

struct BenchOptions {
    std::vector<double> alphas;          ///< diagonal scalings [K, U, X], applied in this order
    double tolerance = 0.0;
    StopRule stop_rule = StopRule::residual;
    StartVector start = StartVector::zero;
    std::optional<double> single_alpha;  ///< single-step scaling, default alphas[0]
    long max_iterations = 1000000;
};

BenchOptions laplace_defaults();
BenchOptions markov_defaults();

/// Three-, two- and single-step rows (in that order) for the Laplace
/// problem on an N x N grid. The two-step scheme uses the first two alphas.
std::vector<BenchRow> bench_laplace(int grid, const BenchOptions& opts);

/// Same for the random walk on n states, solving (I - T^t) x = 0.
std::vector<BenchRow> bench_markov(int states, const BenchOptions& opts);

inline constexpr const char* kBenchCsvHeader = "order,scheme,iterations,residual,error,time_s,rho_or_gamma";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
/// Human table; `metric` names the last column ("rho" or "gamma").
void print_bench_table(std::ostream& out, const std::vector<BenchRow>& rows, const std::string& metric);

}  // namespace altsplit
