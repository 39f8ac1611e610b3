#include "geq/bench.hpp"

#include <json.hpp>

namespace geq {

std::string format_fixed6(const Scalar& v) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.6Rf", v.raw());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string format_sci2(const Scalar& v) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.2Re", v.raw());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {

std::string csv_header(const SolveConfig& cfg) {
    return "# digits=" + std::to_string(cfg.digits) + " tol=" + cfg.tol +
           " max_iter=" + std::to_string(cfg.max_iter) + "\n";
}

}  // namespace

std::string reproduce_table(const std::string& name, const SolveConfig& cfg) {
    std::string problem;
    if (name == "table1") problem = "ex1i";
    else if (name == "table2") problem = "ex1ii";
    else if (name == "table3") problem = "ex2i";
    else throw std::invalid_argument("reproduce_table: unknown table '" + name + "'");

    PrecisionContext ctx(cfg.digits);
    ProblemInstance P = builtin(problem, ctx);
    SolveConfig hcfg = cfg;
    hcfg.method = Method::Halley;
    IterationTrace trace = run(P, P.default_start, hcfg);
    Vector xbar = reference_solution(P, hcfg);
    std::vector<Scalar> errs = error_sequence(trace, xbar);
    std::vector<RateEstimate> rates = estimate_rates(errs, ctx);

    std::size_t d = P.dim();
    std::string out = csv_header(hcfg);
    out += "k";
    for (std::size_t i = 0; i < d; ++i) out += ",x" + std::to_string(i + 1);
    out += ",e_k,r_k,L_k\n";
    for (std::size_t k = 0; k < rates.size(); ++k) {
        out += std::to_string(k);
        for (std::size_t i = 0; i < d; ++i) out += "," + format_fixed6(trace.records[k].x[i]);
        out += "," + format_sci2(rates[k].e_norm);
        out += "," + (rates[k].r ? format_fixed6(*rates[k].r) : std::string("-"));
        out += "," + (rates[k].L ? format_fixed6(*rates[k].L) : std::string("-"));
        out += "\n";
    }
    return out;
}

GridCellResult classify_cell(const ProblemInstance& P, const Vector& x0, const SolveConfig& cfg) {
    SolveConfig ncfg = cfg;
    ncfg.method = Method::Newton;
    SolveConfig hcfg = cfg;
    hcfg.method = Method::Halley;

    IterationTrace nt = run(P, x0, ncfg);
    IterationTrace ht = run(P, x0, hcfg);

    GridCellResult cell;
    cell.x0_1 = x0[0].to_double();
    cell.x0_2 = x0.dim() > 1 ? x0[1].to_double() : 0.0;
    cell.newton_iters = nt.records.back().k;
    cell.halley_iters = ht.records.back().k;
    cell.newton_cost = nt.total_subproblem_solves;
    cell.halley_cost = ht.total_subproblem_solves;
    cell.newton_time = nt.wall_time;
    cell.halley_time = ht.wall_time;

    bool n_ok = nt.status == SolveStatus::Converged;
    bool h_ok = ht.status == SolveStatus::Converged;
    if (!h_ok) cell.case_id = 3;
    else if (!n_ok) cell.case_id = 2;
    else cell.case_id = cell.newton_cost <= cell.halley_cost ? 0 : 1;
    return cell;
}

GridResult run_grid(const GridSpec& spec) {
    if (spec.n_per_axis < 2) throw std::invalid_argument("run_grid: n_per_axis must be >= 2");
    PrecisionContext ctx(spec.cfg.digits);
    ProblemInstance P = builtin(spec.problem, ctx);
    if (P.dim() != 2) throw std::invalid_argument("run_grid: problem must be 2-D");

    const int n = spec.n_per_axis;
    Scalar hx = (ctx.from_double(spec.x_max) - ctx.from_double(spec.x_min)) / ctx.from_long(n - 1);
    Scalar hy = (ctx.from_double(spec.y_max) - ctx.from_double(spec.y_min)) / ctx.from_long(n - 1);

    GridResult res;
    res.cells.reserve(static_cast<std::size_t>(n) * n);
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            Vector x0({ctx.from_double(spec.x_min) + ctx.from_long(ix) * hx,
                       ctx.from_double(spec.y_min) + ctx.from_long(iy) * hy});
            GridCellResult cell = classify_cell(P, x0, spec.cfg);
            ++res.case_counts[cell.case_id];
            res.cells.push_back(cell);
        }
    }
    return res;
}

std::string grid_to_csv(const GridResult& res, const GridSpec& spec) {
    std::string out = csv_header(spec.cfg);
    out += "x0_1,x0_2,case,newton_iters,halley_iters,newton_cost,halley_cost,newton_time,halley_time\n";
    char buf[64];
    for (const auto& c : res.cells) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g", c.x0_1, c.x0_2);
        out += buf;
        out += "," + std::to_string(c.case_id);
        out += "," + std::to_string(c.newton_iters) + "," + std::to_string(c.halley_iters);
        out += "," + std::to_string(c.newton_cost) + "," + std::to_string(c.halley_cost);
        std::snprintf(buf, sizeof buf, ",%.6f,%.6f", c.newton_time, c.halley_time);
        out += buf;
        out += "\n";
    }
    return out;
}

std::string grid_summary_json(const GridResult& res, const GridSpec& spec) {
    nlohmann::json j;
    j["case_counts"] = {{"case0", res.case_counts[0]},
                        {"case1", res.case_counts[1]},
                        {"case2", res.case_counts[2]},
                        {"case3", res.case_counts[3]}};
    j["grid_spec"] = {{"problem", spec.problem},
                      {"x_range", {spec.x_min, spec.x_max}},
                      {"y_range", {spec.y_min, spec.y_max}},
                      {"n_per_axis", spec.n_per_axis}};
    j["config"] = {{"digits", spec.cfg.digits},
                   {"tol", spec.cfg.tol},
                   {"max_iter", spec.cfg.max_iter}};
    return j.dump(2) + "\n";
}

std::string comparison_series_csv(const ProblemInstance& P, const Vector& x0,
                                  const SolveConfig& cfg) {
    SolveConfig ncfg = cfg;
    ncfg.method = Method::Newton;
    SolveConfig hcfg = cfg;
    hcfg.method = Method::Halley;
    Vector xbar = reference_solution(P, cfg);
    PrecisionContext ctx(cfg.digits);
    std::vector<Scalar> en = trim_noise_tail(error_sequence(run(P, x0, ncfg), xbar), ctx);
    std::vector<Scalar> eh = trim_noise_tail(error_sequence(run(P, x0, hcfg), xbar), ctx);

    std::string out = csv_header(cfg);
    out += "k,e_newton,e_halley\n";
    std::size_t m = std::max(en.size(), eh.size());
    for (std::size_t k = 0; k < m; ++k) {
        out += std::to_string(k);
        out += "," + (k < en.size() ? format_sci2(en[k]) : std::string("-"));
        out += "," + (k < eh.size() ? format_sci2(eh[k]) : std::string("-"));
        out += "\n";
    }
    return out;
}

}  // namespace geq
