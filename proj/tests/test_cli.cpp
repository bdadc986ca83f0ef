#include <doctest.h>

#include <fstream>
#include <sstream>

#include "altsplit/bench.hpp"
#include "altsplit/cli.hpp"
#include "altsplit/matrix_market.hpp"
#include "altsplit/problems.hpp"
#include "fixtures.hpp"

using namespace altsplit;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "altsplit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify with an explicit U") {
    fixtures::TempDir dir;
    write_matrix_market(dir.file("a.mtx"), fixtures::ex_a());
    write_matrix_market(dir.file("x.mtx"), fixtures::ex_x());
    const auto r = cli({"classify", "--matrix", dir.file("a.mtx"), "--u", dir.file("x.mtx")});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "(order 3)"));
    CHECK(has(r.out, "VU# has entry -0.25 at (1,1)"));
}

TEST_CASE("classify flag errors") {
    fixtures::TempDir dir;
    write_matrix_market(dir.file("a.mtx"), fixtures::ex_a());
    CHECK(cli({"classify", "--matrix", dir.file("a.mtx")}).code == kExitBadInput);
    CHECK(cli({"classify", "--matrix", dir.file("a.mtx"), "--u", "x", "--diag-alpha", "1"}).code == kExitBadInput);
    const auto z = cli({"classify", "--matrix", dir.file("a.mtx"), "--diag-alpha", "1"});
    CHECK(z.code == kExitBadInput);
    CHECK(has(z.err, "error:"));
    write_matrix_market(dir.file("u.mtx"), Matrix::Identity(2, 2));
    CHECK(cli({"classify", "--matrix", dir.file("a.mtx"), "--u", dir.file("u.mtx")}).code == kExitDimension);
    CHECK(cli({"classify", "--matrix", dir.file("missing.mtx"), "--diag-alpha", "1"}).code == kExitBadInput);
}

TEST_CASE("solve runs a three-step scheme") {
    fixtures::TempDir dir;
    const LaplaceProblem p = make_laplace(5);
    write_matrix_market(dir.file("a.mtx"), p.a);
    write_matrix_market(dir.file("b.mtx"), Matrix(p.b));
    std::string splits;
    for (double al : {1.0, 1.5, 1.75}) {
        const std::string f = dir.file("u" + std::to_string(al) + ".mtx");
        write_matrix_market(f, Matrix((al * p.a.diagonal()).asDiagonal()));
        splits += (splits.empty() ? "" : ",") + f;
    }
    const auto r = cli({"solve", "--matrix", dir.file("a.mtx"), "--rhs", dir.file("b.mtx"), "--split", splits,
                        "--tol", "1e-10", "--out", dir.file("x.mtx")});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "scheme:     3-step"));
    CHECK(has(r.out, "converged:  yes"));
    CHECK((read_vector_market(dir.file("x.mtx")) - p.exact).norm() < 1e-8);

    const auto budget = cli({"solve", "--matrix", dir.file("a.mtx"), "--rhs", dir.file("b.mtx"), "--split", splits,
                             "--max-iters", "2"});
    CHECK(budget.code == kExitNotConverged);
    CHECK(cli({"solve", "--matrix", dir.file("a.mtx"), "--rhs", dir.file("b.mtx"), "--split", splits, "--stop",
               "error"})
              .code == kExitBadInput);
    CHECK(cli({"solve", "--matrix", dir.file("a.mtx"), "--rhs", dir.file("b.mtx"), "--split", splits, "--delta",
               "1.5"})
              .code == kExitBadInput);
    write_matrix_market(dir.file("short.mtx"), Matrix(Vector::Ones(3)));
    CHECK(cli({"solve", "--matrix", dir.file("a.mtx"), "--rhs", dir.file("short.mtx"), "--split", splits}).code ==
          kExitDimension);
}

TEST_CASE("solve on a singular system without a group inverse") {
    fixtures::TempDir dir;
    Matrix a(2, 2);
    a << 0, 1, 0, 0;
    write_matrix_market(dir.file("a.mtx"), a);
    write_matrix_market(dir.file("b.mtx"), Matrix(Vector::Zero(2)));
    write_matrix_market(dir.file("u.mtx"), Matrix(Matrix::Identity(2, 2)));
    const auto r = cli({"solve", "--matrix", dir.file("a.mtx"), "--rhs", dir.file("b.mtx"), "--split",
                        dir.file("u.mtx"), "--max-iters", "5"});
    CHECK(has(r.out, "n/a"));
    write_matrix_market(dir.file("nil.mtx"), a);
    CHECK(cli({"classify", "--matrix", dir.file("a.mtx"), "--u", dir.file("nil.mtx")}).code == kExitNoGroupInverse);
}

TEST_CASE("bench and verify") {
    fixtures::TempDir dir;
    const auto b = cli({"bench", "markov", "--states", "5,6", "--csv", dir.file("m.csv")});
    CHECK(b.code == kExitOk);
    CHECK(has(b.out, "gamma"));
    std::ifstream csv(dir.file("m.csv"));
    std::string header;
    std::getline(csv, header);
    CHECK(header == kBenchCsvHeader);
    CHECK(cli({"bench", "markov", "--stop", "error"}).code == kExitBadInput);
    CHECK(cli({"bench", "laplace", "--grid", "4", "--alphas", "1,2"}).code == kExitBadInput);

    const auto v = cli({"verify", "--suite", "companion", "--trials", "3", "--seed", "5"});
    CHECK(v.code == kExitOk);
    CHECK(has(v.out, "suite companion (seed 5, trials 3"));
    const auto u = cli({"verify", "--suite", "nope"});
    CHECK(u.code == kExitBadInput);
    CHECK(has(u.err, "unknown suite"));
}

TEST_CASE("help and missing subcommand") {
    const auto h = cli({"--help"});
    CHECK(h.code == kExitOk);
    CHECK(has(h.out, "classify"));
    CHECK(cli({}).code == kExitBadInput);
    CHECK(cli({"frobnicate"}).code == kExitBadInput);
}

}
