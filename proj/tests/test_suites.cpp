#include <doctest.h>

#include "altsplit/suites.hpp"

using namespace altsplit;

TEST_SUITE("suites") {

TEST_CASE("each suite runs a few trials deterministically") {
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        const SuiteReport a = run_suite(name, 5, 7);
        const SuiteReport b = run_suite(name, 5, 7);
        CHECK(a.checks > 0);
        CHECK(a.checks == b.checks);
        CHECK(a.failures == b.failures);
        CHECK(a.worst == b.worst);
        CHECK(a.max_size == default_suite_size(name));
    }
}

TEST_CASE("numeric suites stay below their thresholds") {
    for (const char* name : {"group-inverse", "companion", "induced-splitting", "semiconvergence"}) {
        const SuiteReport r = run_suite(name, 30, 11);
        CAPTURE(name);
        CHECK(r.passed());
        CHECK(r.worst <= r.threshold);
    }
}

TEST_CASE("suite arguments") {
    CHECK_THROWS_AS(run_suite("nope", 1, 1), InvalidArgument);
    CHECK_THROWS_AS(run_suite("companion", -1, 1), InvalidArgument);
    const SuiteReport r = run_suite("typeII-convergence", 3, 9, 4);
    CHECK(r.max_size == 4);
    const std::string text = format_suite_report(r);
    CHECK(text.find("suite typeII-convergence (seed 9, trials 3, n <= 4)") == 0);
    CHECK(text.find("hypotheses held:") != std::string::npos);
}

}
