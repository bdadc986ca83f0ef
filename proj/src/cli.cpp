#include "altsplit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

#include "altsplit/bench.hpp"
#include "altsplit/matrix_market.hpp"
#include "altsplit/suites.hpp"

namespace altsplit {

namespace {

int exit_code_for(const std::exception& e, std::ostream& err) {
    err << "error: " << e.what() << '\n';
    if (dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const NotSquare*>(&e) ||
        dynamic_cast<const MismatchedA*>(&e)) {
        return kExitDimension;
    }
    if (dynamic_cast<const IndexGreaterThanOne*>(&e)) return kExitNoGroupInverse;
    return kExitBadInput;
}

struct ClassifyArgs {
    std::string matrix;
    std::string u;
    std::optional<double> diag_alpha;
};

int cmd_classify(const ClassifyArgs& args, std::ostream& out) {
    const Matrix a = read_matrix_market(args.matrix);
    const Splitting s = args.diag_alpha ? diag_scaling_splitting(a, *args.diag_alpha)
                                        : make_splitting(a, read_matrix_market(args.u));
    out << "splitting of " << args.matrix << " (order " << a.rows() << ")\n";
    out << format_report(classify(s));
    return kExitOk;
}

struct SolveArgs {
    std::string matrix;
    std::string rhs;
    std::vector<std::string> splits;
    std::optional<double> delta;
    double tol = 1e-8;
    long max_iters = 10000;
    std::string x0 = "zero";
    std::string stop = "residual";
    std::string out_path;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
    const Matrix a = read_matrix_market(args.matrix);
    const Vector b = read_vector_market(args.rhs);
    if (args.splits.empty() || args.splits.size() > 3) throw InvalidArgument("--split takes one to three files");

    SchemeConfig cfg;
    for (const auto& path : args.splits) cfg.splittings.push_back(make_splitting(a, read_matrix_market(path)));
    cfg.stop_rule = parse_stop_rule(args.stop);
    if (cfg.stop_rule == StopRule::error_vs_exact) throw InvalidArgument("solve supports --stop residual or diff");
    cfg.tolerance = args.tol;
    cfg.max_iterations = args.max_iters;
    cfg.delta = args.delta;
    cfg.validate();
    if (b.size() != a.rows()) {
        throw DimensionMismatch("rhs has length " + std::to_string(b.size()) + ", A has order " + std::to_string(a.rows()));
    }

    Vector x0;
    if (args.x0 == "zero" || args.x0 == "uniform" || args.x0 == "e1") {
        x0 = make_start_vector(parse_start_vector(args.x0), a.rows());
    } else {
        x0 = read_vector_market(args.x0);
    }

    const IterationReport rep = run(cfg, b, x0);
    out << "scheme:     " << cfg.splittings.size() << "-step" << (cfg.delta ? " (shifted)" : "") << '\n';
    out << "iterations: " << rep.iterations << '\n';
    out << "converged:  " << (rep.converged ? "yes" : "no") << '\n';
    out << std::scientific << std::setprecision(6);
    out << "residual:   " << rep.final_residual << '\n';
    try {
        out << "|x - A#b|:  " << (rep.final_x - exact_solution(a, b)).norm() << '\n';
    } catch (const IndexGreaterThanOne&) {
        out << "|x - A#b|:  n/a (A has index greater than one)\n";
    }
    out << std::defaultfloat << "time (s):   " << rep.elapsed_seconds << '\n';
    if (!args.out_path.empty()) write_matrix_market(args.out_path, Matrix(rep.final_x));
    return rep.converged ? kExitOk : kExitNotConverged;
}

struct BenchArgs {
    std::vector<int> sizes;
    std::vector<double> alphas;
    std::optional<double> tol;
    std::optional<std::string> stop;
    std::optional<std::string> x0;
    std::optional<double> single_alpha;
    long max_iters = 1000000;
    std::string csv;
};

int cmd_bench(bool laplace, const BenchArgs& args, std::ostream& out) {
    BenchOptions opts = laplace ? laplace_defaults() : markov_defaults();
    if (!args.alphas.empty()) opts.alphas = args.alphas;
    if (args.tol) opts.tolerance = *args.tol;
    if (args.stop) opts.stop_rule = parse_stop_rule(*args.stop);
    if (args.x0) opts.start = parse_start_vector(*args.x0);
    opts.single_alpha = args.single_alpha;
    opts.max_iterations = args.max_iters;
    if (opts.alphas.size() != 3) throw InvalidArgument("--alphas needs exactly three values");

    std::vector<BenchRow> rows;
    for (int size : args.sizes) {
        const auto part = laplace ? bench_laplace(size, opts) : bench_markov(size, opts);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    out << (laplace ? "Laplace" : "Random walk") << " benchmark, alphas " << opts.alphas[0] << ", "
        << opts.alphas[1] << ", " << opts.alphas[2] << "; stop " << to_string(opts.stop_rule) << " < "
        << opts.tolerance << '\n';
    print_bench_table(out, rows, laplace ? "rho" : "gamma");
    if (!args.csv.empty()) {
        std::ofstream f(args.csv);
        if (!f) throw IoError("cannot write '" + args.csv + "'");
        write_bench_csv(f, rows);
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    int trials = 100;
    std::uint64_t seed = 42;
    int size = 0;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> suites;
    if (args.suite == "all") {
        suites = suite_names();
    } else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), args.suite) == names.end()) {
            err << "error: unknown suite '" << args.suite << "'\n";
            return kExitBadInput;
        }
        suites.push_back(args.suite);
    }
    bool ok = true;
    for (const auto& s : suites) {
        const SuiteReport r = run_suite(s, args.trials, args.seed, args.size);
        out << format_suite_report(r);
        ok = ok && r.passed();
    }
    return ok ? kExitOk : kExitNotConverged;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alternating matrix-splitting iterations for nonsingular and index-one systems"};
    app.name("altsplit");
    app.require_subcommand(1);

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a splitting A = U - V");
    classify_cmd->add_option("--matrix", classify_args.matrix, "A in Matrix Market format")->required();
    auto* u_opt = classify_cmd->add_option("--u", classify_args.u, "U in Matrix Market format");
    auto* alpha_opt = classify_cmd->add_option("--diag-alpha", classify_args.diag_alpha, "use U = alpha diag(A)");
    u_opt->excludes(alpha_opt);
    classify_cmd->require_option(2);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Run a one-, two- or three-step scheme");
    solve_cmd->add_option("--matrix", solve_args.matrix, "A")->required();
    solve_cmd->add_option("--rhs", solve_args.rhs, "b as an n x 1 matrix")->required();
    solve_cmd->add_option("--split", solve_args.splits, "U files, comma separated, applied in order")
        ->required()
        ->delimiter(',');
    solve_cmd->add_option("--delta", solve_args.delta, "shift parameter in (0,1)");
    solve_cmd->add_option("--tol", solve_args.tol, "stopping tolerance")->capture_default_str();
    solve_cmd->add_option("--max-iters", solve_args.max_iters, "iteration budget")->capture_default_str();
    solve_cmd->add_option("--x0", solve_args.x0, "zero, uniform, e1 or a vector file")->capture_default_str();
    solve_cmd->add_option("--stop", solve_args.stop, "residual or diff")->capture_default_str();
    solve_cmd->add_option("--out", solve_args.out_path, "write the final iterate here");

    auto* bench_cmd = app.add_subcommand("bench", "Reproduce the comparison tables");
    bench_cmd->require_subcommand(1);
    BenchArgs laplace_args;
    laplace_args.sizes = {21};
    BenchArgs markov_args;
    markov_args.sizes = {10};
    auto add_bench_flags = [](CLI::App* cmd, BenchArgs& a) {
        cmd->add_option("--alphas", a.alphas, "three diagonal scalings for K, U, X")->delimiter(',');
        cmd->add_option("--tol", a.tol, "stopping tolerance");
        cmd->add_option("--stop", a.stop, "error, residual or diff");
        cmd->add_option("--x0", a.x0, "zero, uniform or e1");
        cmd->add_option("--single-alpha", a.single_alpha, "scaling for the single-step row");
        cmd->add_option("--max-iters", a.max_iters, "iteration budget per scheme")->capture_default_str();
        cmd->add_option("--csv", a.csv, "write rows as CSV");
    };
    auto* laplace_cmd = bench_cmd->add_subcommand("laplace", "Laplace equation on the unit square");
    laplace_cmd->add_option("--grid", laplace_args.sizes, "grid subdivisions N, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    add_bench_flags(laplace_cmd, laplace_args);
    auto* markov_cmd = bench_cmd->add_subcommand("markov", "Random walk stationary vector");
    markov_cmd->add_option("--states", markov_args.sizes, "number of states, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    add_bench_flags(markov_cmd, markov_args);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run a seeded randomized verification suite");
    verify_cmd->add_option("--suite", verify_args.suite, "suite name or all")->required();
    verify_cmd->add_option("--trials", verify_args.trials, "instances per suite")->capture_default_str();
    verify_cmd->add_option("--seed", verify_args.seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--size", verify_args.size, "maximum order (0: suite default)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitBadInput;
    }

    try {
        if (*classify_cmd) return cmd_classify(classify_args, out);
        if (*solve_cmd) return cmd_solve(solve_args, out);
        if (*laplace_cmd) return cmd_bench(true, laplace_args, out);
        if (*markov_cmd) return cmd_bench(false, markov_args, out);
        if (*verify_cmd) return cmd_verify(verify_args, out, err);
    } catch (const std::exception& e) {
        return exit_code_for(e, err);
    }
    return kExitBadInput;
}

}  // namespace altsplit
