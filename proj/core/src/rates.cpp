#include "geq/rates.hpp"

namespace geq {

std::vector<Scalar> error_sequence(const IterationTrace& trace, const Vector& xbar) {
    std::vector<Scalar> errs;
    errs.reserve(trace.records.size());
    for (const auto& rec : trace.records) {
        if (rec.x.dim() != xbar.dim()) throw DimensionMismatch("error_sequence: dimension mismatch");
        errs.push_back(euclidean_norm(rec.x - xbar));
    }
    return errs;
}

std::vector<RateEstimate> estimate_rates(const std::vector<Scalar>& errors,
                                         const PrecisionContext& ctx) {
    Scalar noise_floor = ctx.pow10(20 - ctx.digits());
    auto usable = [&](const Scalar& e) { return e.is_finite() && e > noise_floor; };

    std::vector<RateEstimate> out;
    out.reserve(errors.size());
    for (std::size_t k = 0; k < errors.size(); ++k) {
        RateEstimate est;
        est.k = static_cast<long>(k);
        est.e_norm = errors[k];
        if (k >= 2 && usable(errors[k]) && usable(errors[k - 1]) && usable(errors[k - 2])) {
            Scalar num = log(errors[k]) - log(errors[k - 1]);
            Scalar den = log(errors[k - 1]) - log(errors[k - 2]);
            if (!den.is_zero()) {
                Scalar r = num / den;
                est.r = r;
                est.L = errors[k] / pow(errors[k - 1], r);
            }
        }
        out.push_back(std::move(est));
    }
    return out;
}

std::vector<Scalar> trim_noise_tail(std::vector<Scalar> errors, const PrecisionContext& ctx) {
    Scalar floor = ctx.pow10(20 - ctx.digits());
    while (errors.size() > 1 && errors.back() < floor) errors.pop_back();
    return errors;
}

Vector reference_solution(const ProblemInstance& P, const SolveConfig& cfg) {
    if (P.exact_solution) return *P.exact_solution;
    PrecisionContext hi(2 * cfg.digits);
    ProblemInstance Q = builtin(P.name, hi, P.param_strings);
    SolveConfig hcfg;
    hcfg.method = Method::Halley;
    hcfg.digits = hi.digits();
    hcfg.tol = "1e-" + std::to_string((3 * cfg.digits) / 2);
    hcfg.max_iter = cfg.max_iter;
    IterationTrace t = run(Q, Q.default_start, hcfg);
    if (t.status != SolveStatus::Converged)
        throw std::runtime_error("reference_solution: high-precision solve did not converge for '" +
                                 P.name + "'");
    return t.records.back().x;
}

std::string rate_table_csv(const IterationTrace& trace, const Vector& xbar,
                           const PrecisionContext& ctx) {
    std::vector<Scalar> errs = error_sequence(trace, xbar);
    std::vector<RateEstimate> rates = estimate_rates(errs, ctx);
    std::size_t d = trace.records.empty() ? 0 : trace.records.front().x.dim();
    std::string out;
    out += "# problem=" + trace.problem + " method=" + method_name(trace.config.method) +
           " digits=" + std::to_string(trace.config.digits) + " tol=" + trace.config.tol +
           " max_iter=" + std::to_string(trace.config.max_iter) + "\n";
    out += "k";
    for (std::size_t i = 0; i < d; ++i) out += ",x" + std::to_string(i + 1);
    out += ",e_k,r_k,L_k\n";
    for (std::size_t k = 0; k < rates.size(); ++k) {
        out += std::to_string(k);
        for (std::size_t i = 0; i < d; ++i) out += "," + ctx.format(trace.records[k].x[i]);
        out += "," + ctx.format(rates[k].e_norm);
        out += "," + (rates[k].r ? ctx.format(*rates[k].r) : std::string("-"));
        out += "," + (rates[k].L ? ctx.format(*rates[k].L) : std::string("-"));
        out += "\n";
    }
    return out;
}

}  // namespace geq
