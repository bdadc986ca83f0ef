#include <doctest.h>

#include <sstream>

#include "altsplit/bench.hpp"

using namespace altsplit;

TEST_SUITE("bench") {

TEST_CASE("rows come in three, two, single order with rho ordering") {
    const auto rows = bench_laplace(8, laplace_defaults());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].scheme == "three");
    CHECK(rows[1].scheme == "two");
    CHECK(rows[2].scheme == "single");
    for (const auto& r : rows) {
        CHECK(r.converged);
        CHECK(*r.error < 1e-6);
        CHECK(r.order == 49);
    }
    CHECK(rows[0].rho_or_gamma < rows[1].rho_or_gamma);
    CHECK(rows[1].rho_or_gamma < rows[2].rho_or_gamma);
    CHECK(rows[0].iterations < rows[1].iterations);
    CHECK(rows[1].iterations < rows[2].iterations);
}

TEST_CASE("singular benchmark reports gamma and no error column") {
    const auto rows = bench_markov(10, markov_defaults());
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK_FALSE(r.error);
        CHECK(r.residual < 1e-7);
    }
    CHECK(rows[0].rho_or_gamma == doctest::Approx(0.9274).epsilon(1e-3));
}

TEST_CASE("error stop rule needs a known solution") {
    BenchOptions o = markov_defaults();
    o.stop_rule = StopRule::error_vs_exact;
    CHECK_THROWS_AS(bench_markov(10, o), InvalidArgument);
    o = markov_defaults();
    o.alphas = {2.0, 3.0};
    CHECK_THROWS_AS(bench_markov(10, o), InvalidArgument);
}

TEST_CASE("CSV and table output") {
    auto rows = bench_markov(5, markov_defaults());
    std::ostringstream csv;
    write_bench_csv(csv, rows);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == kBenchCsvHeader);
    int n = 0;
    while (std::getline(lines, line)) {
        ++n;
        CHECK(std::count(line.begin(), line.end(), ',') == 6);
    }
    CHECK(n == 3);
    rows[2].converged = false;
    std::ostringstream table;
    print_bench_table(table, rows, "gamma");
    CHECK(table.str().find("gamma") != std::string::npos);
    CHECK(table.str().find("(not converged)") != std::string::npos);
}

TEST_CASE("start vectors") {
    CHECK(make_start_vector(StartVector::uniform, 4).sum() == doctest::Approx(1.0));
    CHECK(make_start_vector(parse_start_vector("e1"), 3)(0) == 1.0);
    CHECK_THROWS_AS(parse_start_vector("ones"), InvalidArgument);
}

}
