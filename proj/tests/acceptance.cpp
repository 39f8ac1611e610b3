// Acceptance suite: one pass/fail line per criterion, in order.
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "geq/bench.hpp"
#include "geq/kantorovich.hpp"

using namespace geq;

namespace {

bool report(int n, const char* what, bool ok) {
    std::printf("criterion %2d: %s  %s\n", n, ok ? "PASS" : "FAIL", what);
    std::fflush(stdout);
    return ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct PublishedRow {
    std::vector<const char*> x;  // iterate components, 6 decimals
    const char* e;               // error, 2-decimal-mantissa scientific
};

// Common check for the three published tables: every printed iterate value
// matches to the shown 6 decimals, every error magnitude lies within a factor
// 1.05 of the printed 3-significant-figure value, the resolvable error series
// ends exactly where the table does, and the last row's rate estimates hit
// the printed values within the stated tolerances.
bool check_table(const char* problem, const std::vector<PublishedRow>& rows,
                 const char* r_last, const char* r_tol, const char* L_last,
                 const char* L_tol, double e_last_log10_lo, double e_last_log10_hi,
                 bool require_exact_end = false) {
    PrecisionContext ctx(400);
    ProblemInstance P = builtin(problem, ctx);
    SolveConfig cfg;  // 400 digits, tol 1e-300, cap 200
    IterationTrace t = run(P, P.default_start, cfg);
    bool ok = t.status == SolveStatus::Converged;
    if (t.records.size() < rows.size()) return false;

    std::vector<Scalar> errs =
        trim_noise_tail(error_sequence(t, *P.exact_solution), ctx);
    if (errs.size() < rows.size()) return false;
    // the printed table may omit a final sub-tolerance row; when the
    // published run ends exactly at the tolerance, require the same length
    ok = ok && (!require_exact_end || errs.size() == rows.size());

    Scalar factor = log(ctx.parse("1.05"));
    for (std::size_t k = 0; k < rows.size() && ok; ++k) {
        for (std::size_t j = 0; j < rows[k].x.size(); ++j)
            ok = ok && format_fixed6(t.records[k].x[j]) == rows[k].x[j];
        ok = ok && abs(log(errs[k]) - log(ctx.parse(rows[k].e))) <= factor;
    }

    std::size_t last = rows.size() - 1;
    double lg = (log(errs[last]) / log(ctx.from_long(10))).to_double();
    ok = ok && lg >= e_last_log10_lo && lg <= e_last_log10_hi;

    auto est = estimate_rates(errs, ctx);
    ok = ok && est[last].r.has_value();
    if (ok) {
        ok = ok && abs(*est[last].r - ctx.parse(r_last)) < ctx.parse(r_tol);
        ok = ok && abs(*est[last].L - ctx.parse(L_last)) < ctx.parse(L_tol);
    }
    return ok;
}

// f(x) = sinh(x) - 3/8 with no set-valued part, for the equivalence check.
ProblemInstance sinh_zero_map(const PrecisionContext& ctx) {
    SmoothMap m;
    m.dim_in = m.dim_out = 1;
    m.eval = [&ctx](const Vector& x) { return Vector({sinh(x[0]) - ctx.parse("0.375")}); };
    m.jacobian = [&ctx](const Vector& x) {
        Matrix J(1, 1, ctx);
        J.at(0, 0) = cosh(x[0]);
        return J;
    };
    m.second_directional = [&ctx](const Vector& x, const Vector& h) {
        Matrix H(1, 1, ctx);
        H.at(0, 0) = sinh(x[0]) * h[0];
        return H;
    };
    return ProblemInstance{"sinh_zero", ctx, m, SetValuedMap{{BranchKind::ZeroMap}},
                           Vector({asinh(ctx.parse("0.375"))}), {}, {},
                           Vector({ctx.from_long(6)})};
}

bool matches_classical_for_five_steps(const ProblemInstance& P, const PrecisionContext& ctx) {
    SolveConfig cfg;
    cfg.max_iter = 5;
    IterationTrace t = run(P, P.default_start, cfg);
    if (t.records.size() < 6) return false;
    bool ok = true;
    Scalar x = P.default_start[0];
    for (int k = 1; k <= 5; ++k) {
        auto [u, xn] = classical_halley_step(P.f, x, ctx);
        ok = ok && t.records[k].u.has_value();
        if (!ok) return false;
        ok = ok && mpfr_cmp((*t.records[k].u)[0].raw(), u.raw()) == 0;
        ok = ok && mpfr_cmp(t.records[k].x[0].raw(), xn.raw()) == 0;
        x = xn;
    }
    return ok;
}

// ---- double-precision residual oracle for the subproblem suite ----

double coord_residual(BranchKind kind, double x, double g) {
    switch (kind) {
        case BranchKind::ZeroMap: return std::fabs(g);
        case BranchKind::F1:
            if (x > 0) return std::fabs(g);
            if (x == 0) return std::max(g, 0.0);
            return std::numeric_limits<double>::infinity();
        case BranchKind::F2:
            if (x < 0) return std::fabs(g - 1);  // F2 = {-1} there
            if (x > 0) return std::fabs(g + 1);  // F2 = {+1}
            return std::max(std::fabs(g) - 1.0, 0.0);
    }
    return 0.0;
}

struct DoubleSpec {
    std::vector<BranchKind> kinds;
    std::vector<double> c, base;
    std::vector<std::vector<double>> B;
};

double spec_residual(const DoubleSpec& s, const std::vector<double>& x) {
    double acc = 0;
    for (std::size_t i = 0; i < s.kinds.size(); ++i) {
        double g = s.c[i];
        for (std::size_t j = 0; j < s.kinds.size(); ++j) g += s.B[i][j] * (x[j] - s.base[j]);
        double d = coord_residual(s.kinds[i], x[i], g);
        if (!std::isfinite(d)) return d;
        acc += d * d;
    }
    return std::sqrt(acc);
}

// Two-stage scan with zero-snapping so the zero branches are visible.
double scan_min_1d(const DoubleSpec& s) {
    double best = std::numeric_limits<double>::infinity();
    double bx = 0;
    const double coarse = 0.005;
    for (double x = -10; x <= 10 + 1e-12; x += coarse)
        for (double xx : {x, 0.0}) {
            double r = spec_residual(s, {xx});
            if (r < best) { best = r; bx = xx; }
        }
    for (double x = bx - 2 * coarse; x <= bx + 2 * coarse + 1e-12; x += 1e-4)
        for (double xx : {x, 0.0}) {
            double r = spec_residual(s, {xx});
            best = std::min(best, r);
        }
    return best;
}

double scan_min_2d(const DoubleSpec& s) {
    double best = std::numeric_limits<double>::infinity();
    double bx = 0, by = 0;
    const double coarse = 0.02;
    for (double x = -10; x <= 10 + 1e-12; x += coarse)
        for (double y = -10; y <= 10 + 1e-12; y += coarse)
            for (double xx : {x, 0.0})
                for (double yy : {y, 0.0}) {
                    double r = spec_residual(s, {xx, yy});
                    if (r < best) { best = r; bx = xx; by = yy; }
                }
    const double fine = 1e-3;
    double cx = bx, cy = by;
    for (double x = cx - 2 * coarse; x <= cx + 2 * coarse + 1e-12; x += fine)
        for (double y = cy - 2 * coarse; y <= cy + 2 * coarse + 1e-12; y += fine)
            for (double xx : {x, 0.0})
                for (double yy : {y, 0.0}) {
                    double r = spec_residual(s, {xx, yy});
                    best = std::min(best, r);
                }
    return best;
}

SubproblemSpec lift(const DoubleSpec& d, const PrecisionContext& ctx) {
    std::size_t n = d.kinds.size();
    Vector c(n, ctx), base(n, ctx);
    Matrix B(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = ctx.from_double(d.c[i]);
        base[i] = ctx.from_double(d.base[i]);
        for (std::size_t j = 0; j < n; ++j) B.at(i, j) = ctx.from_double(d.B[i][j]);
    }
    return SubproblemSpec{c, B, base, SetValuedMap{d.kinds}, ctx};
}

// Agreement semantics: a returned point must be a genuine residual zero and
// the scan must confirm a solution exists; NoSolution requires the scan's
// minimum to stay bounded away from zero.
bool oracle_agrees(const DoubleSpec& d, const PrecisionContext& ctx) {
    double scan = d.kinds.size() == 1 ? scan_min_1d(d) : scan_min_2d(d);
    try {
        auto sol = solve_inclusion(lift(d, ctx));
        std::vector<double> x;
        for (std::size_t i = 0; i < d.kinds.size(); ++i) x.push_back(sol.x[i].to_double());
        return scan < 5e-3 && spec_residual(d, x) < 1e-9;
    } catch (const NoSolution&) {
        return scan > 1e-2;
    }
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

// Grid rows minus the wall-time columns (the only nondeterministic fields).
std::string strip_times(const std::string& csv) {
    std::string out;
    for (const auto& line : split_lines(csv)) {
        if (!line.empty() && (line[0] == '#' || line[0] == 'x')) {
            out += line + "\n";
            continue;
        }
        std::size_t cut = line.size();
        for (int commas = 0; commas < 2 && cut != std::string::npos; ++commas)
            cut = line.rfind(',', cut - 1);
        out += line.substr(0, cut) + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("1: published single-variable table, positive solution") {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = check_table(
        "ex1i",
        {{{"6.000000"}, "5.63e+00"},
         {{"4.007496"}, "3.64e+00"},
         {{"2.065099"}, "1.70e+00"},
         {{"0.547668"}, "1.81e-01"},
         {{"0.366054"}, "6.71e-04"},
         {{"0.366725"}, "4.11e-11"},
         {{"0.366725"}, "9.40e-33"},
         {{"0.366725"}, "1.13e-97"},
         {{"0.366725"}, "1.95e-292"}},
        "3.000000", "1e-4", "0.135845", "1e-4", -292.1, -291.6);
    ok = ok && seconds_since(t0) < 30.0;
    CHECK(report(1, "table 1 reproduction (ex1i, x0 = 6)", ok));
}

TEST_CASE("2: published single-variable table, negative solution") {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = check_table(
        "ex1ii",
        {{{"-10.000000"}, "7.11e+00"},
         {{"-8.003266"}, "5.11e+00"},
         {{"-6.027198"}, "3.13e+00"},
         {{"-4.193713"}, "1.30e+00"},
         {{"-3.049397"}, "1.56e-01"},
         {{"-2.893750"}, "3.06e-04"},
         {{"-2.893444"}, "2.30e-12"},
         {{"-2.893444"}, "9.83e-37"},
         {{"-2.893444"}, "7.62e-110"}},
        "3.000000", "1e-4", "0.080285", "1e-4", -109.4, -108.9);
    ok = ok && seconds_since(t0) < 30.0;
    CHECK(report(2, "table 2 reproduction (ex1ii, x0 = -10)", ok));
}

TEST_CASE("3: published two-variable table") {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = check_table(
        "ex2i",
        {{{"1.000000", "-1.000000"}, "1.35e+00"},
         {{"1.028824", "0.173903"}, "1.73e-01"},
         {{"1.043876", "0.346136"}, "4.52e-04"},
         {{"1.043988", "0.346574"}, "1.00e-11"},
         {{"1.043988", "0.346574"}, "1.58e-34"},
         {{"1.043988", "0.346574"}, "6.56e-103"},
         {{"1.043988", "0.346574"}, "4.70e-308"}},
        "3.000000", "1e-4", "0.166638", "1e-3", -307.7, -307.0, /*require_exact_end=*/true);
    ok = ok && seconds_since(t0) < 30.0;
    CHECK(report(3, "table 3 reproduction (ex2i, x0 = (1,-1), 6 iterations)", ok));
}

TEST_CASE("4: Newton contrast needs exactly eleven iterations") {
    PrecisionContext ctx(400);
    ProblemInstance P = builtin("ex2i", ctx);
    SolveConfig cfg;

    cfg.method = Method::Newton;
    IterationTrace nt = run(P, P.default_start, cfg);
    std::vector<Scalar> ne = trim_noise_tail(error_sequence(nt, *P.exact_solution), ctx);

    cfg.method = Method::Halley;
    IterationTrace ht = run(P, P.default_start, cfg);
    std::vector<Scalar> he = trim_noise_tail(error_sequence(ht, *P.exact_solution), ctx);

    bool ok = nt.status == SolveStatus::Converged && ht.status == SolveStatus::Converged;
    ok = ok && ne.size() == 12;  // k = 0..11: eleven iterations carry error
    ok = ok && he.size() == 7;   // six for the third-order scheme
    CHECK(report(4, "Newton on ex2i takes exactly 11 iterations (Halley 6)", ok));
}

TEST_CASE("5: generalized scheme matches the classical iteration bit-for-bit") {
    PrecisionContext ctx(400);
    bool ok = matches_classical_for_five_steps(sinh_zero_map(ctx), ctx);
    // ex1i starts and stays in the region where its set-valued part is {0},
    // so the inclusion step must coincide with the classical smooth step
    ok = ok && matches_classical_for_five_steps(builtin("ex1i", ctx), ctx);
    CHECK(report(5, "five Halley steps identical to classical_halley_step bits", ok));
}

TEST_CASE("6: randomized subproblem instances against the residual-scan oracle") {
    PrecisionContext ctx(60);
    std::mt19937_64 rng(20240824);
    std::uniform_real_distribution<double> cd(-3.0, 3.0);
    std::uniform_real_distribution<double> bd(0.5, 3.0);
    std::uniform_real_distribution<double> off(-0.5, 0.5);

    int total = 0, disagreements = 0;

    // 1-D instances with the half-line set-valued part; re-draw borderline
    // coefficients so the oracle's feasible/infeasible verdict has margin
    for (int rep = 0; rep < 70; ++rep) {
        DoubleSpec d;
        d.kinds = {BranchKind::F1};
        for (;;) {
            d.c = {cd(rng)};
            d.B = {{bd(rng)}};
            d.base = {off(rng)};
            double g0 = d.c[0] - d.B[0][0] * d.base[0];  // value at x = 0
            double root = d.base[0] - d.c[0] / d.B[0][0];
            if (std::fabs(g0) > 0.05 && std::fabs(root) > 0.05) break;
        }
        ++total;
        if (!oracle_agrees(d, ctx)) ++disagreements;
    }

    // 1-D instances with the sign-function set-valued part
    for (int rep = 0; rep < 60; ++rep) {
        DoubleSpec d;
        d.kinds = {BranchKind::F2};
        for (;;) {
            d.c = {cd(rng)};
            d.B = {{bd(rng)}};
            d.base = {off(rng)};
            double g0 = d.c[0] - d.B[0][0] * d.base[0];
            double xn = d.base[0] + (1 - d.c[0]) / d.B[0][0];
            double xp = d.base[0] - (1 + d.c[0]) / d.B[0][0];
            if (std::fabs(std::fabs(g0) - 1) > 0.05 && std::fabs(xn) > 0.05 &&
                std::fabs(xp) > 0.05)
                break;
        }
        ++total;
        if (!oracle_agrees(d, ctx)) ++disagreements;
    }

    // 2-D sign-function instances with diagonally dominant matrices
    for (int rep = 0; rep < 70; ++rep) {
        DoubleSpec d;
        d.kinds = {BranchKind::F2, BranchKind::F2};
        d.c = {cd(rng), cd(rng)};
        d.base = {off(rng), off(rng)};
        d.B = {{2.0 + off(rng), off(rng)}, {off(rng), 2.0 + off(rng)}};
        ++total;
        if (!oracle_agrees(d, ctx)) ++disagreements;
    }

    bool ok = total == 200 && disagreements == 0;
    CHECK(report(6, "200 random inclusions agree with the scan oracle", ok));
}

TEST_CASE("7: randomized majorant property suite") {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(400);
    Scalar floor = ctx.pow10(-380);
    std::mt19937_64 rng(7777);
    std::uniform_real_distribution<double> pick(0.2, 2.0);
    std::uniform_real_distribution<double> frac(0.05, 0.85);

    bool ok = true;
    const int n = 10;
    for (int rep = 0; rep < 100 && ok; ++rep) {
        MajorantParams p{ctx.from_double(pick(rng)), ctx.from_double(pick(rng)),
                         ctx.from_double(pick(rng)), ctx.zero()};
        p.eta = ctx.from_double(frac(rng)) * eta_threshold(p.kappa, p.l1, p.l2);

        auto [tbar, that] = roots_of_h(p, ctx);
        ok = ok && tbar > ctx.zero() && that > tbar;
        ok = ok && abs(h_eval(p, tbar).h) <= floor;
        ok = ok && abs(h_eval(p, that).h) <= floor;

        auto [s, t] = majorant_sequences(p, n, ctx);
        int resolvable = 0;
        while (resolvable < n && tbar - t[resolvable + 1] > floor) ++resolvable;
        for (int k = 0; k < resolvable && ok; ++k) {
            ok = ok && t[k] < t[k + 1] && s[k] < s[k + 1];
            ok = ok && t[k] <= s[k + 1] && s[k + 1] <= t[k + 1];
            ok = ok && t[k + 1] < tbar;
        }
        ok = ok && abs(tbar - t[n]) <= floor * ctx.from_long(100) * (ctx.from_long(1) + tbar);

        // cubic gap decay over the first six steps: g_{k+1} <= C g_k^3 with a
        // single constant, max log-deviation from the fitted C below 0.5.
        // The fit starts at the gap produced by the first step; the seed gap
        // g_0 = t_bar - 0 reflects the artificial start, not the dynamics.
        std::vector<Scalar> logc;
        for (int k = 1; k <= 6; ++k) {
            Scalar g = tbar - t[k];
            Scalar gn = tbar - t[k + 1];
            if (gn <= floor) break;
            logc.push_back(log(gn) - ctx.from_long(3) * log(g));
        }
        ok = ok && logc.size() >= 2;
        if (ok) {
            Scalar mean = ctx.zero();
            for (const auto& lc : logc) mean = mean + lc;
            mean = mean / ctx.from_long(static_cast<long>(logc.size()));
            for (const auto& lc : logc) ok = ok && abs(lc - mean) < ctx.parse("0.5");
        }

        for (int i = 1; i <= 1000 && ok; ++i) {
            Scalar h1 = h_eval(p, tbar * ctx.from_long(i) / ctx.from_long(1001)).h1;
            ok = ok && h1 > ctx.from_long(-1) && h1 < ctx.zero();
        }
    }
    ok = ok && seconds_since(t0) < 60.0;
    CHECK(report(7, "100 random majorants: roots, monotone interleaved sequences, cubic gaps", ok));
}

TEST_CASE("8: worked certificate passes; boundary perturbations flip it") {
    PrecisionContext ctx(120);
    Scalar one = ctx.from_long(1);
    CertificateInput base{MajorantParams{one, one, one, ctx.parse("0.1")}, one, one,
                          ctx.parse("0.05")};
    MajorantReport rep = certify(base, ctx);
    bool ok = rep.pass && rep.conditions.size() == 4;
    for (const auto& c : rep.conditions) ok = ok && c.pass;
    ok = ok && rep.t_bar.has_value();

    CertificateInput c1 = base;  // kappa*||y0|| < eta made non-strict
    c1.y0_norm = c1.params.eta;
    ok = ok && !certify(c1, ctx).pass;

    CertificateInput c2 = base;  // eta pushed past admissibility
    c2.params.eta = ctx.parse("0.5");
    ok = ok && !certify(c2, ctx).pass;

    CertificateInput c3 = base;  // range bound b tightened below 3l1/2 t^2 + ||y0||
    c3.b = ctx.parse("0.06");
    ok = ok && !certify(c3, ctx).pass;

    CertificateInput c4 = base;  // domain radius a pulled under t_bar
    c4.a = *rep.t_bar / ctx.from_long(2);
    ok = ok && !certify(c4, ctx).pass;

    CHECK(report(8, "worked certificate PASSes; each boundary violation FAILs", ok));
}

TEST_CASE("9: desk-scale basin grids, deterministic with a nonempty Case 2") {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    long case2 = 0;
    for (const char* name : {"ex2i", "ex2ii"}) {
        GridSpec spec;
        spec.problem = name;
        spec.n_per_axis = 17;
        spec.cfg.digits = 120;
        spec.cfg.tol = "1e-100";
        spec.cfg.max_iter = 200;
        GridResult a = run_grid(spec);
        GridResult b = run_grid(spec);
        ok = ok && a.cells.size() == 17 * 17;
        ok = ok && strip_times(grid_to_csv(a, spec)) == strip_times(grid_to_csv(b, spec));
        ok = ok && grid_summary_json(a, spec) == grid_summary_json(b, spec);
        case2 += a.case_counts[2];
    }
    ok = ok && case2 > 0;
    ok = ok && seconds_since(t0) < 600.0;
    CHECK(report(9, "17x17 grids on ex2i/ex2ii: byte-deterministic, Case 2 nonempty", ok));
}

TEST_CASE("10: cubic order on every builtin") {
    PrecisionContext ctx(400);
    SolveConfig cfg;
    bool ok = true;
    for (const auto& name : builtin_names()) {
        ProblemInstance P = builtin(name, ctx);
        IterationTrace t = run(P, P.default_start, cfg);
        ok = ok && t.status == SolveStatus::Converged;
        auto est = estimate_rates(error_sequence(t, reference_solution(P, cfg)), ctx);
        std::vector<Scalar> defined;
        for (const auto& e : est)
            if (e.r) defined.push_back(*e.r);
        ok = ok && defined.size() >= 2;
        for (std::size_t i = defined.size() - 2; ok && i < defined.size(); ++i)
            ok = ok && defined[i] > ctx.parse("2.99") && defined[i] < ctx.parse("3.01");
    }
    CHECK(report(10, "final two rate estimates in [2.99, 3.01] for every builtin", ok));
}
