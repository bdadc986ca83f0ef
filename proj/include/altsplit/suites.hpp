#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altsplit/dense_core.hpp"

namespace altsplit {

/// Outcome of one seeded randomized suite.
struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    Index max_size = 0;
    int checks = 0;           ///< individual checks (one per verdict or comparison)
    int failures = 0;
    int hypotheses_held = 0;  ///< theorem suites only
    double worst = 0.0;       ///< largest measured error, suites with a numeric threshold
    double threshold = 0.0;
    std::optional<std::string> first_counterexample;

    bool passed() const { return failures == 0; }
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Default maximum order for a suite.
Index default_suite_size(const std::string& suite);

/// Runs one suite. Throws InvalidArgument for an unknown name. size <= 0
/// selects the suite default.
SuiteReport run_suite(const std::string& suite, int trials, std::uint64_t seed, Index size = 0);

/// Multi-line human summary.
std::string format_suite_report(const SuiteReport& r);

}  // namespace altsplit
