#include "altsplit/suites.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "altsplit/analysis.hpp"
#include "altsplit/random_instances.hpp"

namespace altsplit {

namespace {

constexpr double kGroupInverseTol = 1e-10;
constexpr double kCompanionTol = 1e-8;
constexpr double kInducedTol = 1e-8;
constexpr double kLimitTol = 1e-8;

Index pick(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

std::string describe(const Matrix& m) {
    std::ostringstream os;
    os << std::setprecision(6) << m;
    return os.str();
}

// Records one numeric check against a threshold.
void record(SuiteReport& r, double value, const std::function<std::string()>& context) {
    ++r.checks;
    r.worst = std::max(r.worst, value);
    if (!(value < r.threshold)) {
        ++r.failures;
        if (!r.first_counterexample) r.first_counterexample = context();
    }
}

void record_failure(SuiteReport& r, const std::string& what) {
    ++r.checks;
    ++r.failures;
    if (!r.first_counterexample) r.first_counterexample = what;
}

void group_inverse_suite(SuiteReport& r, Rng& rng) {
    r.threshold = kGroupInverseTol;
    for (int t = 0; t < r.trials; ++t) {
        const Index n = pick(rng, 1, r.max_size);
        const Index k = pick(rng, 0, n);
        const Matrix a = random_index_one(rng, n, k);
        const Matrix x = group_inverse(a);
        const double na = std::max(1.0, max_abs(a));
        const double nx = std::max(1.0, max_abs(x));
        const double res = std::max({max_abs(Matrix(a * x * a - a)) / na, max_abs(Matrix(x * a * x - x)) / nx,
                                     max_abs(Matrix(a * x - x * a)) / (na * nx)});
        record(r, res, [&] {
            return "trial " + std::to_string(t) + ", n=" + std::to_string(n) + ", rank " + std::to_string(k) +
                   ": residual " + std::to_string(res) + "\nA =\n" + describe(a);
        });
    }
}

SplittingInstance proper_instance(Rng& rng, Index max_n, int t) {
    const Index n = pick(rng, 2, max_n);
    const Index k = pick(rng, 1, n);
    switch (t % 3) {
        case 0: return random_proper_triple(rng, n, k);
        case 1: return random_group_monotone_triple(rng, n, k, false);
        default: return random_group_monotone_triple(rng, n, k, true);
    }
}

void companion_suite(SuiteReport& r, Rng& rng) {
    r.threshold = kCompanionTol;
    for (int t = 0; t < r.trials; ++t) {
        const auto inst = proper_instance(rng, r.max_size, t);
        const Matrix h = alternating_iteration_matrix(inst.splits);
        const Matrix s = companion_matrix(inst.splits);
        const Matrix a_sharp = group_inverse(inst.a);
        const double rho_gap = std::abs(spectral_radius(s) - spectral_radius(h));
        const double identity_gap = max_abs_diff(s, inst.a * h * a_sharp);
        record(r, std::max(rho_gap, identity_gap), [&] {
            return "trial " + std::to_string(t) + " (" + inst.family + "): |rho(S)-rho(H)| = " + std::to_string(rho_gap) +
                   ", max|S - AHA#| = " + std::to_string(identity_gap) + "\nA =\n" + describe(inst.a);
        });
    }
}

void induced_suite(SuiteReport& r, Rng& rng) {
    r.threshold = kInducedTol;
    for (int t = 0; t < r.trials; ++t) {
        const Index n = pick(rng, 2, r.max_size);
        const auto inst = random_proper_triple(rng, n, pick(rng, 1, n));
        try {
            const Matrix h = alternating_iteration_matrix(inst.splits);
            const Splitting b = induced_splitting(inst.a, h);
            const double product_gap = max_abs_diff(b.iteration_matrix(), h);
            const double closed_gap = max_abs_diff(b_sharp_closed_form(inst.splits), group_inverse(b.u()));
            record(r, std::max(product_gap, closed_gap), [&] {
                return "trial " + std::to_string(t) + " (" + inst.family + "): max|B#C - H| = " +
                       std::to_string(product_gap) + ", closed form gap " + std::to_string(closed_gap);
            });
        } catch (const Error& e) {
            record_failure(r, "trial " + std::to_string(t) + " (" + inst.family + "): " + e.what());
        }
    }
}

std::string verdict_text(const TheoremVerdict& v, const std::string& family, int t) {
    std::ostringstream os;
    os << "trial " << t << " (" << family << "), " << v.theorem_id << ": hypotheses hold, conclusion fails;";
    for (const auto& [k, val] : v.measured) os << ' ' << k << '=' << std::setprecision(10) << val;
    return os.str();
}

void record_verdict(SuiteReport& r, const TheoremVerdict& v, const std::string& family, int t) {
    ++r.checks;
    if (v.hypotheses_hold) ++r.hypotheses_held;
    if (v.is_counterexample()) {
        ++r.failures;
        if (!r.first_counterexample) r.first_counterexample = verdict_text(v, family, t);
    }
}

SplittingInstance convergence_instance(Rng& rng, Index max_n, int t) {
    const Index n = pick(rng, 2, max_n);
    switch (t % 6) {
        case 0: return random_group_monotone_triple(rng, n, pick(rng, 1, n), false);
        case 1: return random_group_monotone_triple(rng, n, pick(rng, 1, n), true);
        case 2: return random_group_monotone_triple(rng, n, n, true);
        case 3: return random_m_matrix_triple(rng, n, true);
        case 4: return random_m_matrix_triple(rng, n, false);
        default: return random_proper_triple(rng, n, pick(rng, 1, n));
    }
}

void convergence_suite(SuiteReport& r, Rng& rng) {
    for (int t = 0; t < r.trials; ++t) {
        const auto inst = convergence_instance(rng, r.max_size, t);
        try {
            record_verdict(r, verify_convergence_theorem(r.suite, inst.splits), inst.family, t);
        } catch (const Error& e) {
            record_failure(r, "trial " + std::to_string(t) + " (" + inst.family + "): " + e.what());
        }
    }
}

SplittingInstance singular_instance(Rng& rng, Index max_n, int t) {
    const Index n = pick(rng, 2, max_n);
    switch (t % 3) {
        case 0: return random_singular_m_matrix_triple(rng, n, true);
        case 1: return random_singular_m_matrix_triple(rng, n, false);
        default: return random_m_matrix_triple(rng, n, t % 2 == 0);
    }
}

SplittingInstance quasi_instance(Rng& rng, Index max_n, int t) {
    if (t % 4 == 3 || max_n < 3) return singular_instance(rng, max_n, t / 4);
    return random_quasi_regular_triple(rng, pick(rng, 3, max_n));
}

void semiconvergence_theorem_suite(SuiteReport& r, Rng& rng, const std::vector<std::string>& ids, bool quasi) {
    for (int t = 0; t < r.trials; ++t) {
        const auto inst = quasi ? quasi_instance(rng, r.max_size, t) : singular_instance(rng, r.max_size, t);
        for (const auto& id : ids) {
            try {
                if (id == "delta-shift") {
                    for (double delta : {0.1, 0.5, 0.9}) {
                        record_verdict(r, verify_semiconvergence_theorem(id, inst.splits, {}, delta), inst.family, t);
                    }
                } else {
                    record_verdict(r, verify_semiconvergence_theorem(id, inst.splits), inst.family, t);
                }
            } catch (const Error& e) {
                record_failure(r, "trial " + std::to_string(t) + " (" + inst.family + "), " + id + ": " + e.what());
            }
        }
    }
}

void oracle_suite(SuiteReport& r, Rng& rng) {
    r.threshold = kLimitTol;
    constexpr int kinds = static_cast<int>(std::size(kAllIterationKinds));
    for (int t = 0; t < r.trials; ++t) {
        const IterationKind kind = kAllIterationKinds[t % kinds];
        const Index n = pick(rng, kind == IterationKind::jordan_at_one ? 2 : 1, r.max_size);
        const Matrix m = random_iteration_matrix(rng, n, kind);
        const auto cert = is_semiconvergent(m);
        const auto oracle = power_limit_oracle(m);
        const auto context = [&] {
            return "trial " + std::to_string(t) + " (" + to_string(kind) + ", n=" + std::to_string(n) +
                   "): certificate " + (cert.verdict ? "semiconvergent" : "not semiconvergent") + ", oracle " +
                   (oracle ? "found a limit" : "found no limit") + ", rho=" + std::to_string(cert.rho) +
                   ", gamma=" + std::to_string(cert.gamma) + "\nT =\n" + describe(m);
        };
        if (cert.verdict != oracle.has_value()) {
            record_failure(r, context());
            continue;
        }
        record(r, cert.verdict ? max_abs_diff(*cert.limit_matrix, *oracle) : 0.0, context);
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "group-inverse", "companion",    "induced-splitting", "typeII-convergence", "single-vs-three",
        "both-types-comparison", "two-vs-three", "semiconvergence", "regular-semiconvergence", "quasi"};
    return names;
}

Index default_suite_size(const std::string& suite) {
    if (suite == "group-inverse" || suite == "semiconvergence") return 10;
    if (suite == "companion" || suite == "induced-splitting") return 8;
    return 6;
}

SuiteReport run_suite(const std::string& suite, int trials, std::uint64_t seed, Index size) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw InvalidArgument("unknown suite '" + suite + "'");
    }
    if (trials < 0) throw InvalidArgument("trials must be nonnegative");
    SuiteReport r;
    r.suite = suite;
    r.seed = seed;
    r.trials = trials;
    r.max_size = size > 0 ? size : default_suite_size(suite);
    if (r.max_size < 2 && suite != "group-inverse" && suite != "semiconvergence") {
        throw InvalidArgument("suite '" + suite + "' needs size >= 2");
    }
    Rng rng(seed);

    if (suite == "group-inverse") {
        group_inverse_suite(r, rng);
    } else if (suite == "companion") {
        companion_suite(r, rng);
    } else if (suite == "induced-splitting") {
        induced_suite(r, rng);
    } else if (suite == "semiconvergence") {
        oracle_suite(r, rng);
    } else if (suite == "regular-semiconvergence") {
        semiconvergence_theorem_suite(r, rng, {"regular-semiconvergence", "delta-shift", "induced-regular"}, false);
    } else if (suite == "quasi") {
        semiconvergence_theorem_suite(r, rng,
                                      {"quasi-three-step", "quasi-single-vs-three", "quasi-comparison", "quasi-two-vs-three"}, true);
    } else {
        convergence_suite(r, rng);
    }
    return r;
}

std::string format_suite_report(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << " (seed " << r.seed << ", trials " << r.trials << ", n <= " << r.max_size << ")\n";
    os << "  checks: " << r.checks << "  passed: " << r.checks - r.failures << "  failed: " << r.failures << '\n';
    if (r.threshold > 0.0) {
        os << "  worst error: " << std::scientific << std::setprecision(3) << r.worst << " (threshold " << r.threshold
           << ")\n";
        os << std::defaultfloat;
    } else {
        os << "  hypotheses held: " << r.hypotheses_held << '\n';
    }
    if (r.first_counterexample) os << "  first counterexample: " << *r.first_counterexample << '\n';
    return os.str();
}

}  // namespace altsplit
