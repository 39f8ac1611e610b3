#pragma once

#include <optional>
#include <vector>

#include "geq/scalar.hpp"

namespace geq {

struct NotAdmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of the scalar majorant h(t) = kappa*l2/6 t^3 + kappa*l1/2 t^2 - t + eta.
struct MajorantParams {
    Scalar kappa;
    Scalar l1;  // bound on ||f''||
    Scalar l2;  // Lipschitz constant of f''
    Scalar eta;
};

struct HDerivs {
    Scalar h, h1, h2;
};

HDerivs h_eval(const MajorantParams& p, const Scalar& t);

/// Largest eta for which h has two positive roots:
/// 2(kl1 + 2 sqrt(kl1^2*k... )) — the closed-form admissibility bound in
/// terms of kappa*l1 and kappa*l2.
Scalar eta_threshold(const Scalar& kappa, const Scalar& l1, const Scalar& l2);

/// Two positive roots t_bar <= t_hat, by bracketed bisection with Newton
/// polish. Throws NotAdmissible when eta >= eta_threshold. Accepts the
/// degenerate quadratic l2 = 0.
std::pair<Scalar, Scalar> roots_of_h(const MajorantParams& p, const PrecisionContext& ctx);

/// Scalar predictor/corrector sequences s_k, t_k from t0 = s0 = 0;
/// both returned with length n+1.
std::pair<std::vector<Scalar>, std::vector<Scalar>> majorant_sequences(const MajorantParams& p,
                                                                       int n,
                                                                       const PrecisionContext& ctx);

struct CertificateInput {
    MajorantParams params;
    Scalar a;        // domain radius
    Scalar b;        // range radius
    Scalar y0_norm;  // ||y0|| with y0 in f(x0)+F(x0)
};

struct ConditionVerdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct MajorantReport {
    Scalar eta_max;
    bool admissible = false;
    std::optional<Scalar> t_bar, t_hat;
    std::vector<Scalar> s_seq, t_seq;
    std::vector<ConditionVerdict> conditions;
    bool pass = false;
    // Empirical least-squares fit of log(t_bar - t_k) against 3^k; reported
    // as an observation, not a proof constant.
    std::optional<Scalar> alpha_fit, M_fit;
};

MajorantReport certify(const CertificateInput& inp, const PrecisionContext& ctx, int steps = 10);

std::string report_to_json(const MajorantReport& rep, const PrecisionContext& ctx);
std::string report_to_text(const MajorantReport& rep, const PrecisionContext& ctx);

}  // namespace geq
