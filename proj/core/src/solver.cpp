#include "geq/solver.hpp"

#include <chrono>

#include <json.hpp>

namespace geq {

IterationTrace run(const ProblemInstance& P, const Vector& x0, const SolveConfig& cfg) {
    if (x0.dim() != P.dim()) throw DimensionMismatch("run: starting point dimension mismatch");
    if (P.ctx.digits() != cfg.digits)
        throw std::invalid_argument("run: problem context digits differ from config digits");
    const PrecisionContext& ctx = P.ctx;
    Scalar tol = ctx.parse(cfg.tol);

    auto t_start = std::chrono::steady_clock::now();

    IterationTrace trace;
    trace.problem = P.name;
    trace.config = cfg;

    Vector x = x0;
    Scalar res = residual_distance(P, x);
    trace.records.push_back(IterateRecord{0, x, std::nullopt, res, std::nullopt, 0});

    while (true) {
        if (res.is_finite() && res <= tol) {
            trace.status = SolveStatus::Converged;
            break;
        }
        long k = trace.records.back().k;
        if (k >= cfg.max_iter) {
            trace.status = SolveStatus::MaxIter;
            break;
        }
        try {
            long solves = 0;
            Vector u = solve_inclusion(newton_operator(P, x)).x;
            ++solves;
            Vector x_next = u;
            std::optional<Vector> u_rec;
            if (cfg.method == Method::Halley) {
                x_next = solve_inclusion(halley_operator(P, x, u)).x;
                ++solves;
                u_rec = u;
            }
            trace.total_subproblem_solves += solves;
            Scalar step = euclidean_norm(x_next - x);
            x = x_next;
            res = residual_distance(P, x);
            trace.records.push_back(IterateRecord{k + 1, x, std::move(u_rec), res, step, solves});
        } catch (const NoSolution&) {
            trace.status = SolveStatus::SubproblemFailure;
            break;
        }
    }

    trace.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return trace;
}

std::pair<Scalar, Scalar> classical_halley_step(const SmoothMap& f, const Scalar& x_k,
                                                const PrecisionContext& ctx) {
    Vector xv({x_k});
    Scalar fv = f.eval(xv)[0];
    Scalar fp = f.jacobian(xv).at(0, 0);
    if (fp.is_zero()) throw ZeroDerivative("classical_halley_step: f'(x_k) = 0");
    Scalar u = x_k + (ctx.zero() - fv) / fp;
    Scalar half = ctx.from_double(0.5);
    // Same operation order as halley_operator + solve_inclusion, so the two
    // paths agree bit-for-bit on F = {0}.
    Scalar denom = fp + half * f.second_directional(xv, Vector({u - x_k})).at(0, 0);
    if (denom.is_zero()) throw ZeroDerivative("classical_halley_step: corrected slope is 0");
    Scalar x_next = x_k + (ctx.zero() - fv) / denom;
    return {u, x_next};
}

std::string method_name(Method m) { return m == Method::Newton ? "newton" : "halley"; }

std::string status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "CONVERGED";
        case SolveStatus::MaxIter: return "MAX_ITER";
        default: return "SUBPROBLEM_FAILURE";
    }
}

namespace {

Method method_from_name(const std::string& s) {
    if (s == "newton") return Method::Newton;
    if (s == "halley") return Method::Halley;
    throw std::invalid_argument("unknown method '" + s + "'");
}

SolveStatus status_from_name(const std::string& s) {
    if (s == "CONVERGED") return SolveStatus::Converged;
    if (s == "MAX_ITER") return SolveStatus::MaxIter;
    if (s == "SUBPROBLEM_FAILURE") return SolveStatus::SubproblemFailure;
    throw std::invalid_argument("unknown status '" + s + "'");
}

nlohmann::json vector_to_json(const Vector& v, const PrecisionContext& ctx) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(ctx.format(v[i]));
    return a;
}

Vector vector_from_json(const nlohmann::json& a, mpfr_prec_t bits) {
    std::vector<Scalar> e;
    for (const auto& s : a) e.push_back(Scalar::parse(s.get<std::string>(), bits));
    return Vector(std::move(e));
}

}  // namespace

std::string trace_to_json(const IterationTrace& t, const PrecisionContext& ctx) {
    nlohmann::json j;
    j["problem"] = t.problem;
    j["config"] = {{"method", method_name(t.config.method)},
                   {"digits", t.config.digits},
                   {"tol", t.config.tol},
                   {"max_iter", t.config.max_iter}};
    j["status"] = status_name(t.status);
    j["total_subproblem_solves"] = t.total_subproblem_solves;
    j["wall_time"] = t.wall_time;
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : t.records) {
        nlohmann::json jr;
        jr["k"] = r.k;
        jr["x"] = vector_to_json(r.x, ctx);
        jr["u"] = r.u ? vector_to_json(*r.u, ctx) : nlohmann::json();
        jr["residual"] = ctx.format(r.residual);
        jr["step_norm"] = r.step_norm ? nlohmann::json(ctx.format(*r.step_norm)) : nlohmann::json();
        jr["subproblem_solves"] = r.subproblem_solves;
        recs.push_back(std::move(jr));
    }
    j["records"] = std::move(recs);
    return j.dump(2) + "\n";
}

IterationTrace trace_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    IterationTrace t;
    t.problem = j.at("problem").get<std::string>();
    t.config.method = method_from_name(j.at("config").at("method").get<std::string>());
    t.config.digits = j.at("config").at("digits").get<int>();
    t.config.tol = j.at("config").at("tol").get<std::string>();
    t.config.max_iter = j.at("config").at("max_iter").get<long>();
    t.status = status_from_name(j.at("status").get<std::string>());
    t.total_subproblem_solves = j.at("total_subproblem_solves").get<long>();
    t.wall_time = j.at("wall_time").get<double>();
    mpfr_prec_t bits = bits_for_digits(t.config.digits);
    for (const auto& jr : j.at("records")) {
        IterateRecord r;
        r.k = jr.at("k").get<long>();
        r.x = vector_from_json(jr.at("x"), bits);
        if (!jr.at("u").is_null()) r.u = vector_from_json(jr.at("u"), bits);
        r.residual = Scalar::parse(jr.at("residual").get<std::string>(), bits);
        if (!jr.at("step_norm").is_null())
            r.step_norm = Scalar::parse(jr.at("step_norm").get<std::string>(), bits);
        r.subproblem_solves = jr.at("subproblem_solves").get<long>();
        t.records.push_back(std::move(r));
    }
    return t;
}

std::string trace_to_csv(const IterationTrace& t, const PrecisionContext& ctx) {
    std::string out;
    out += "# problem=" + t.problem + " method=" + method_name(t.config.method) +
           " digits=" + std::to_string(t.config.digits) + " tol=" + t.config.tol +
           " max_iter=" + std::to_string(t.config.max_iter) + " status=" + status_name(t.status) + "\n";
    std::size_t d = t.records.empty() ? 0 : t.records.front().x.dim();
    out += "k";
    for (std::size_t i = 0; i < d; ++i) out += ",x" + std::to_string(i + 1);
    for (std::size_t i = 0; i < d; ++i) out += ",u" + std::to_string(i + 1);
    out += ",residual,step_norm\n";
    for (const auto& r : t.records) {
        out += std::to_string(r.k);
        for (std::size_t i = 0; i < d; ++i) out += "," + ctx.format(r.x[i]);
        for (std::size_t i = 0; i < d; ++i) out += "," + (r.u ? ctx.format((*r.u)[i]) : std::string("-"));
        out += "," + ctx.format(r.residual);
        out += "," + (r.step_norm ? ctx.format(*r.step_norm) : std::string("-"));
        out += "\n";
    }
    return out;
}

}  // namespace geq
