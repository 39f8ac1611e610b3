#include "geq/kantorovich.hpp"

#include <cmath>

#include <json.hpp>

namespace geq {

HDerivs h_eval(const MajorantParams& p, const Scalar& t) {
    Scalar kl1 = p.kappa * p.l1;
    Scalar kl2 = p.kappa * p.l2;
    mpfr_prec_t prec = t.precision();
    Scalar two(2L, prec), six(6L, prec), one(1L, prec);
    Scalar t2 = t * t;
    Scalar t3 = t2 * t;
    HDerivs d;
    d.h = kl2 / six * t3 + kl1 / two * t2 - t + p.eta;
    d.h1 = kl2 / two * t2 + kl1 * t - one;
    d.h2 = kl2 * t + kl1;
    return d;
}

Scalar eta_threshold(const Scalar& kappa, const Scalar& l1, const Scalar& l2) {
    Scalar kl1 = kappa * l1;
    mpfr_prec_t prec = kl1.precision();
    Scalar two(2L, prec), three(3L, prec);
    Scalar s = sqrt(kl1 * kl1 + two * kappa * l2);
    Scalar num = two * (kl1 + two * s);
    Scalar den = three * (kl1 + s) * (kl1 + s);
    return num / den;
}

namespace {

// Positive stationary point of h (root of h'), where h attains its minimum.
Scalar stationary_point(const MajorantParams& p, const PrecisionContext& ctx) {
    Scalar kl1 = p.kappa * p.l1;
    Scalar kl2 = p.kappa * p.l2;
    Scalar one = ctx.from_long(1);
    Scalar two = ctx.from_long(2);
    if (kl2.is_zero()) return one / kl1;
    return (-kl1 + sqrt(kl1 * kl1 + two * kl2)) / kl2;
}

// Safeguarded Newton inside a sign-changing bracket.
Scalar refine_root(const MajorantParams& p, Scalar lo, Scalar hi, const PrecisionContext& ctx) {
    Scalar target = ctx.pow10(20 - ctx.digits());
    Scalar two = ctx.from_long(2);
    int sign_lo = h_eval(p, lo).h.sign();
    Scalar x = (lo + hi) / two;
    for (int it = 0; it < 200000; ++it) {
        HDerivs d = h_eval(p, x);
        if (abs(d.h) <= target) return x;
        if (d.h.sign() == sign_lo) lo = x; else hi = x;
        Scalar next = x;
        bool newton_ok = false;
        if (!d.h1.is_zero()) {
            next = x - d.h / d.h1;
            newton_ok = next > lo && next < hi;
        }
        if (!newton_ok) next = (lo + hi) / two;
        if (next == x) return x;  // bracket exhausted at working precision
        x = next;
    }
    return x;
}

}  // namespace

std::pair<Scalar, Scalar> roots_of_h(const MajorantParams& p, const PrecisionContext& ctx) {
    Scalar eta_max = eta_threshold(p.kappa, p.l1, p.l2);
    if (!(p.eta < eta_max)) throw NotAdmissible("roots_of_h: eta >= admissibility threshold");

    Scalar zero = ctx.zero();
    Scalar two = ctx.from_long(2);
    Scalar tstar = stationary_point(p, ctx);
    Scalar t_bar = refine_root(p, zero, tstar, ctx);

    Scalar t_big = tstar * two;
    while (h_eval(p, t_big).h <= zero) t_big *= two;
    Scalar t_hat = refine_root(p, tstar, t_big, ctx);
    return {t_bar, t_hat};
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> majorant_sequences(const MajorantParams& p,
                                                                       int n,
                                                                       const PrecisionContext& ctx) {
    Scalar eta_max = eta_threshold(p.kappa, p.l1, p.l2);
    if (!(p.eta < eta_max)) throw NotAdmissible("majorant_sequences: eta >= admissibility threshold");

    Scalar half = ctx.from_double(0.5);
    std::vector<Scalar> s_seq{ctx.zero()}, t_seq{ctx.zero()};
    for (int k = 0; k < n; ++k) {
        const Scalar& tk = t_seq.back();
        HDerivs d = h_eval(p, tk);
        Scalar s_next = tk - d.h / d.h1;
        Scalar t_next = tk - d.h / (d.h1 + half * d.h2 * (s_next - tk));
        s_seq.push_back(std::move(s_next));
        t_seq.push_back(std::move(t_next));
    }
    return {std::move(s_seq), std::move(t_seq)};
}

MajorantReport certify(const CertificateInput& inp, const PrecisionContext& ctx, int steps) {
    const MajorantParams& p = inp.params;
    MajorantReport rep;
    rep.eta_max = eta_threshold(p.kappa, p.l1, p.l2);
    rep.admissible = p.eta < rep.eta_max;

    if (rep.admissible) {
        auto [tb, th] = roots_of_h(p, ctx);
        rep.t_bar = tb;
        rep.t_hat = th;
    }

    auto fmt = [&](const Scalar& s) { return s.to_decimal(17); };
    bool c1 = p.kappa * inp.y0_norm < p.eta;
    rep.conditions.push_back({"kappa*||y0|| < eta", c1,
                              fmt(p.kappa * inp.y0_norm) + " vs " + fmt(p.eta)});
    rep.conditions.push_back({"eta < eta_max", rep.admissible,
                              fmt(p.eta) + " vs " + fmt(rep.eta_max)});
    Scalar three_half = ctx.from_double(1.5);
    bool c3 = false, c4 = false;
    std::string d3 = "t_bar unavailable", d4 = d3;
    if (rep.t_bar) {
        Scalar lhs = three_half * p.l1 * (*rep.t_bar) * (*rep.t_bar) + inp.y0_norm;
        c3 = lhs < inp.b;
        d3 = fmt(lhs) + " vs " + fmt(inp.b);
        c4 = *rep.t_bar < inp.a;
        d4 = fmt(*rep.t_bar) + " vs " + fmt(inp.a);
    }
    rep.conditions.push_back({"3*l1/2*t_bar^2 + ||y0|| < b", c3, d3});
    rep.conditions.push_back({"t_bar < a", c4, d4});
    rep.pass = c1 && rep.admissible && c3 && c4;

    if (rep.pass) {
        auto [s_seq, t_seq] = majorant_sequences(p, steps, ctx);
        rep.s_seq = s_seq;
        rep.t_seq = t_seq;

        // Least-squares of log(t_bar - t_k) against 3^k over the usable prefix.
        Scalar floor = ctx.pow10(20 - ctx.digits());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int npts = 0;
        for (std::size_t k = 0; k < t_seq.size(); ++k) {
            Scalar g = *rep.t_bar - t_seq[k];
            if (!(g > floor)) break;
            double xk = std::pow(3.0, static_cast<double>(k));
            double yk = log(g).to_double();
            sx += xk; sy += yk; sxx += xk * xk; sxy += xk * yk;
            ++npts;
        }
        if (npts >= 2) {
            double denom = npts * sxx - sx * sx;
            double slope = (npts * sxy - sx * sy) / denom;
            double intercept = (sy - slope * sx) / npts;
            if (slope < 0) {
                rep.alpha_fit = ctx.from_double(std::exp(slope));
                rep.M_fit = ctx.from_double(std::exp(intercept));
            }
        }
    }
    return rep;
}

std::string report_to_json(const MajorantReport& rep, const PrecisionContext& ctx) {
    nlohmann::json j;
    j["eta_max"] = ctx.format(rep.eta_max);
    j["admissible"] = rep.admissible;
    j["t_bar"] = rep.t_bar ? nlohmann::json(ctx.format(*rep.t_bar)) : nlohmann::json();
    j["t_hat"] = rep.t_hat ? nlohmann::json(ctx.format(*rep.t_hat)) : nlohmann::json();
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : rep.conditions)
        conds.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["conditions"] = std::move(conds);
    j["certificate"] = rep.pass ? "PASS" : "FAIL";
    nlohmann::json s = nlohmann::json::array(), t = nlohmann::json::array();
    for (const auto& v : rep.s_seq) s.push_back(ctx.format(v));
    for (const auto& v : rep.t_seq) t.push_back(ctx.format(v));
    j["s_seq"] = std::move(s);
    j["t_seq"] = std::move(t);
    j["alpha_fit"] = rep.alpha_fit ? nlohmann::json(ctx.format(*rep.alpha_fit)) : nlohmann::json();
    j["M_fit"] = rep.M_fit ? nlohmann::json(ctx.format(*rep.M_fit)) : nlohmann::json();
    return j.dump(2) + "\n";
}

std::string report_to_text(const MajorantReport& rep, const PrecisionContext& ctx) {
    std::string out;
    for (const auto& c : rep.conditions) {
        out += (c.pass ? "PASS  " : "FAIL  ") + c.name + "  (" + c.detail + ")\n";
    }
    out += std::string("certificate: ") + (rep.pass ? "PASS" : "FAIL") + "\n";
    if (rep.t_bar) out += "t_bar = " + rep.t_bar->to_decimal(30) + "\n";
    if (rep.t_hat) out += "t_hat = " + rep.t_hat->to_decimal(30) + "\n";
    if (rep.alpha_fit) out += "alpha_fit = " + rep.alpha_fit->to_decimal(17) + "\n";
    if (rep.M_fit) out += "M_fit = " + rep.M_fit->to_decimal(17) + "\n";
    (void)ctx;
    return out;
}

}  // namespace geq
