// Command-line front end: solve, rate, certify, grid, repro.
//
// Exit codes: 0 success (including FAIL certificates), 2 usage error,
// 3 solver or certificate machinery failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "geq/bench.hpp"
#include "geq/kantorovich.hpp"

namespace {

using namespace geq;

int default_digits() {
    if (const char* env = std::getenv("GE_DIGITS")) {
        int d = std::atoi(env);
        if (d >= 16) return d;
    }
    return 400;
}

// Content is assembled fully before the file is opened, so a failure never
// leaves a partial file behind.
void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << content;
}

Vector parse_x0(const std::string& text, const PrecisionContext& ctx) {
    std::vector<Scalar> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(ctx.parse(item));
    if (entries.empty()) throw std::invalid_argument("--x0: empty coordinate list");
    return Vector(std::move(entries));
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--param expects name=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

struct SolveArgs {
    std::string problem;
    std::string method = "halley";
    std::string x0;
    int digits = default_digits();
    std::string tol = "1e-300";
    long max_iter = 200;
    std::string format = "json";
    std::string out;
    std::vector<std::string> params;
};

void add_solve_flags(CLI::App* cmd, SolveArgs& a, bool with_method) {
    cmd->add_option("--problem", a.problem, "builtin problem name")->required();
    if (with_method)
        cmd->add_option("--method", a.method, "newton|halley")
            ->check(CLI::IsMember({"newton", "halley"}));
    cmd->add_option("--x0", a.x0, "starting point, comma-separated decimals");
    cmd->add_option("--digits", a.digits, "working precision in decimal digits");
    cmd->add_option("--tol", a.tol, "residual stopping tolerance");
    cmd->add_option("--max-iter", a.max_iter, "outer iteration cap");
    cmd->add_option("--param", a.params, "problem parameter override name=value");
    cmd->add_option("--out", a.out, "output path (stdout when omitted)");
}

SolveConfig make_config(const SolveArgs& a) {
    SolveConfig cfg;
    cfg.method = a.method == "newton" ? Method::Newton : Method::Halley;
    cfg.digits = a.digits;
    cfg.tol = a.tol;
    cfg.max_iter = a.max_iter;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Josephy-Newton / Josephy-Halley solver for generalized equations 0 in f(x)+F(x)"};
    app.require_subcommand(1);

    SolveArgs sa;
    CLI::App* solve_cmd = app.add_subcommand("solve", "run one method and emit the iteration trace");
    add_solve_flags(solve_cmd, sa, true);
    solve_cmd->add_option("--format", sa.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    SolveArgs ra;
    CLI::App* rate_cmd = app.add_subcommand("rate", "run Halley and emit the error/order table");
    add_solve_flags(rate_cmd, ra, true);

    struct {
        std::string kappa, l1, l2, eta, a, b, y0norm;
        int steps = 10;
        int digits = default_digits();
        std::string out;
    } ca;
    CLI::App* cert_cmd = app.add_subcommand("certify", "evaluate the semilocal convergence certificate");
    cert_cmd->add_option("--kappa", ca.kappa)->required();
    cert_cmd->add_option("--l1", ca.l1)->required();
    cert_cmd->add_option("--l2", ca.l2)->required();
    cert_cmd->add_option("--eta", ca.eta)->required();
    cert_cmd->add_option("--a", ca.a)->required();
    cert_cmd->add_option("--b", ca.b)->required();
    cert_cmd->add_option("--y0norm", ca.y0norm)->required();
    cert_cmd->add_option("--steps", ca.steps, "majorant sequence length");
    cert_cmd->add_option("--digits", ca.digits);
    cert_cmd->add_option("--out", ca.out, "JSON report path (stdout when omitted)");

    struct {
        std::string problem;
        std::vector<double> range{-4.0, 4.0};
        int n = 41;
        int digits = 120;
        std::string tol = "1e-100";
        long max_iter = 200;
        std::string out;
    } ga;
    CLI::App* grid_cmd = app.add_subcommand("grid", "classify starting points on a uniform lattice");
    grid_cmd->add_option("--problem", ga.problem)->required();
    grid_cmd->add_option("--range", ga.range, "interval a,b used for both axes")->expected(2)->delimiter(',');
    grid_cmd->add_option("--n", ga.n, "lattice points per axis");
    grid_cmd->add_option("--digits", ga.digits);
    grid_cmd->add_option("--tol", ga.tol);
    grid_cmd->add_option("--max-iter", ga.max_iter);
    grid_cmd->add_option("--out", ga.out, "grid CSV path; summary JSON goes to <out>.summary.json")->required();

    struct {
        std::string what;
        std::string out;
        int n = 17;
    } pa;
    CLI::App* repro_cmd = app.add_subcommand("repro", "reproduce a published table or figure dataset");
    repro_cmd->add_option("what", pa.what, "table1|table2|table3|fig1|fig2|fig3")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3", "fig1", "fig2", "fig3"}));
    repro_cmd->add_option("--out", pa.out, "output path (stdout when omitted)");
    repro_cmd->add_option("--n", pa.n, "lattice points per axis for fig2/fig3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*solve_cmd) {
            PrecisionContext ctx(sa.digits);
            ProblemInstance P = builtin(sa.problem, ctx, parse_params(sa.params));
            Vector x0 = sa.x0.empty() ? P.default_start : parse_x0(sa.x0, ctx);
            IterationTrace t = run(P, x0, make_config(sa));
            emit(sa.format == "csv" ? trace_to_csv(t, ctx) : trace_to_json(t, ctx), sa.out);
            return t.status == SolveStatus::SubproblemFailure ? 3 : 0;
        }
        if (*rate_cmd) {
            PrecisionContext ctx(ra.digits);
            ProblemInstance P = builtin(ra.problem, ctx, parse_params(ra.params));
            Vector x0 = ra.x0.empty() ? P.default_start : parse_x0(ra.x0, ctx);
            SolveConfig cfg = make_config(ra);
            IterationTrace t = run(P, x0, cfg);
            if (t.status == SolveStatus::SubproblemFailure) {
                std::cerr << "error: subproblem failure at iteration " << t.records.back().k << "\n";
                return 3;
            }
            emit(rate_table_csv(t, reference_solution(P, cfg), ctx), ra.out);
            return 0;
        }
        if (*cert_cmd) {
            PrecisionContext ctx(ca.digits);
            CertificateInput inp{MajorantParams{ctx.parse(ca.kappa), ctx.parse(ca.l1),
                                                ctx.parse(ca.l2), ctx.parse(ca.eta)},
                                 ctx.parse(ca.a), ctx.parse(ca.b), ctx.parse(ca.y0norm)};
            MajorantReport rep = certify(inp, ctx, ca.steps);
            std::cout << report_to_text(rep, ctx);
            emit(report_to_json(rep, ctx), ca.out);
            return 0;
        }
        if (*grid_cmd) {
            GridSpec spec;
            spec.problem = ga.problem;
            spec.x_min = spec.y_min = ga.range[0];
            spec.x_max = spec.y_max = ga.range[1];
            spec.n_per_axis = ga.n;
            spec.cfg.method = Method::Halley;
            spec.cfg.digits = ga.digits;
            spec.cfg.tol = ga.tol;
            spec.cfg.max_iter = ga.max_iter;
            GridResult res = run_grid(spec);
            emit(grid_to_csv(res, spec), ga.out);
            emit(grid_summary_json(res, spec), ga.out + ".summary.json");
            return 0;
        }
        if (*repro_cmd) {
            if (pa.what.rfind("table", 0) == 0) {
                SolveConfig cfg;  // the published settings: 400 digits, 1e-300, 200 iterations
                emit(reproduce_table(pa.what, cfg), pa.out);
                return 0;
            }
            if (pa.what == "fig1") {
                PrecisionContext ctx(400);
                ProblemInstance P = builtin("ex2i", ctx);
                SolveConfig cfg;
                emit(comparison_series_csv(P, P.default_start, cfg), pa.out);
                return 0;
            }
            // fig2/fig3: desk-scale grid profile (reduced precision)
            GridSpec spec;
            spec.problem = pa.what == "fig2" ? "ex2i" : "ex2ii";
            spec.n_per_axis = pa.n;
            spec.cfg.digits = 120;
            spec.cfg.tol = "1e-100";
            spec.cfg.max_iter = 200;
            GridResult res = run_grid(spec);
            emit(grid_to_csv(res, spec), pa.out);
            if (!pa.out.empty()) emit(grid_summary_json(res, spec), pa.out + ".summary.json");
            return 0;
        }
    } catch (const UnknownProblem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
