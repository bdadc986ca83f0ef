// Acceptance gate: one PASS/FAIL line per criterion. With no arguments all
// nine run; otherwise only the listed criterion numbers.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "altsplit/analysis.hpp"
#include "altsplit/bench.hpp"
#include "altsplit/suites.hpp"
#include "fixtures.hpp"

using namespace altsplit;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_4dp(double got, double want) { return std::round(got * 1e4) == std::round(want * 1e4); }

bool within(double got, double want, double rel) { return std::abs(got - want) <= rel * want; }

constexpr std::uint64_t kSeed = 42;

void criterion1(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const double err = max_abs_diff(group_inverse(fixtures::ex_a()), fixtures::ex_a_sharp());
    o.require(err < 1e-12, "A# entrywise to 1e-12");
    const auto splits = fixtures::ex_triple();
    const char* witness[] = {"VU# has entry -1 at (1,1)", "VU# has entry -1 at (1,1)", "VU# has entry -0.25 at (1,1)"};
    for (int i = 0; i < 3; ++i) {
        const auto r = classify(splits[i]);
        o.require(r.is_proper, "proper");
        o.require(!r.is_g_weak_regular_type2, "type II false");
        o.require(r.reason_for("g_weak_regular_type2") == witness[i], std::string("witness ") + witness[i]);
    }
    const double rho = spectral_radius(alternating_iteration_matrix(splits));
    o.require(std::abs(rho - 0.25) <= 1e-10, "rho(H) = 0.25");
    const double secs = seconds_since(t0);
    o.require(secs < 1.0, "runtime < 1 s");
    o.detail << "|A# - reference| = " << err << ", witnesses -1/-1/-0.25, rho(H) = " << rho << ", " << secs << " s";
}

struct TableRow {
    long it;
    double rho;
    double residual;  // 0 when the table has no residual column
};

void check_bench(Outcome& o, const std::vector<BenchRow>& rows, const TableRow (&want)[3], double it_rel,
                 bool norms) {
    const char* names[] = {"three", "two", "single"};
    for (int i = 0; i < 3; ++i) {
        const BenchRow& r = rows[i];
        o.detail << " " << names[i] << " IT " << r.iterations << " rho/gamma " << std::fixed;
        o.detail.precision(4);
        o.detail << r.rho_or_gamma << std::defaultfloat;
        o.detail.precision(5);
        o.require(r.converged, std::string(names[i]) + " converged");
        o.require(same_4dp(r.rho_or_gamma, want[i].rho), std::string(names[i]) + " rho/gamma to 4 dp");
        o.require(within(static_cast<double>(r.iterations), static_cast<double>(want[i].it), it_rel),
                  std::string(names[i]) + " IT within tolerance");
        if (norms) {
            o.detail << " err " << *r.error << " res " << r.residual;
            o.require(*r.error >= 9e-7 && *r.error < 1e-6, std::string(names[i]) + " error in [9e-7, 1e-6)");
            o.require(within(r.residual, want[i].residual, 0.02), std::string(names[i]) + " residual vs reference");
        }
        o.detail << ";";
    }
}

void criterion2(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const TableRow want[3] = {{672, 0.9752, 4.4511e-8}, {902, 0.9815, 4.4374e-8}, {1502, 0.9888, 4.4629e-8}};
    check_bench(o, bench_laplace(21, laplace_defaults()), want, 0.02, true);
    const double secs = seconds_since(t0);
    o.require(secs < 30.0, "runtime < 30 s");
    o.detail << " " << secs << " s";
}

void criterion3(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const TableRow want[3] = {{2669, 0.9934, 0}, {3583, 0.9951, 0}, {5970, 0.9971, 0}};
    const auto rows = bench_laplace(41, laplace_defaults());
    check_bench(o, rows, want, 0.02, false);
    const double secs = seconds_since(t0);
    o.require(secs < 300.0, "runtime < 5 min");
    o.detail << " " << secs << " s";
    if (!(rows[0].time_s < rows[1].time_s && rows[1].time_s < rows[2].time_s))
        o.detail << " (warning: loop times not ordered three < two < single)";
}

void criterion4(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const TableRow want10[3] = {{166, 0.9274, 0}, {228, 0.9465, 0}, {409, 0.9698, 0}};
    const TableRow want30[3] = {{1330, 0.9928, 0}, {1822, 0.9947, 0}, {3279, 0.9971, 0}};
    for (int n : {10, 30}) {
        const auto rows = bench_markov(n, markov_defaults());
        o.detail << " n=" << n << ":";
        check_bench(o, rows, n == 10 ? want10 : want30, 0.05, false);
        o.require(rows[0].iterations < rows[1].iterations && rows[1].iterations < rows[2].iterations,
                  "IT(three) < IT(two) < IT(single)");
    }
    const double secs = seconds_since(t0);
    o.require(secs < 10.0, "runtime < 10 s");
    o.detail << " " << secs << " s";
}

void numeric_suite(Outcome& o, const char* name, int trials, double limit) {
    const SuiteReport r = run_suite(name, trials, kSeed);
    o.require(r.passed(), std::string(name) + " failures");
    o.require(r.worst < limit, std::string(name) + " worst below limit");
    o.detail << name << ": " << r.checks << " checks, " << r.failures << " failed, worst " << r.worst << " (limit "
             << limit << ", n <= " << r.max_size << ", seed " << kSeed << ")";
}

void criterion5(Outcome& o) { numeric_suite(o, "companion", 100, 1e-8); }
void criterion6(Outcome& o) { numeric_suite(o, "induced-splitting", 100, 1e-8); }
void criterion8(Outcome& o) { numeric_suite(o, "semiconvergence", 200, 1e-8); }
void criterion9(Outcome& o) { numeric_suite(o, "group-inverse", 100, 1e-10); }

void criterion7(Outcome& o) {
    const char* suites[] = {"typeII-convergence", "single-vs-three", "both-types-comparison", "two-vs-three",
                            "regular-semiconvergence", "quasi"};
    for (const char* s : suites) {
        const SuiteReport r = run_suite(s, 100, kSeed);
        o.detail << " " << s << " " << r.hypotheses_held << " held/" << r.failures << " counterexamples;";
        if (!r.passed()) {
            o.require(false, std::string(s) + ": " + r.first_counterexample.value_or("counterexample"));
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::function<void(Outcome&)> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9};
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int c = std::atoi(argv[i]);
        if (c < 1 || c > 9) {
            std::fprintf(stderr, "usage: %s [criterion 1-9 ...]\n", argv[0]);
            return 2;
        }
        selected.insert(c);
    }
    if (selected.empty())
        for (int c = 1; c <= 9; ++c) selected.insert(c);

    bool all = true;
    for (int c : selected) {
        Outcome o;
        o.detail.precision(5);
        try {
            criteria[c - 1](o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s  %s\n", c, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
