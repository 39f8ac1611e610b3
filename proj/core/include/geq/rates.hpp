#pragma once

#include "geq/solver.hpp"

namespace geq {

struct RateEstimate {
    long k = 0;
    Scalar e_norm;
    std::optional<Scalar> r;  // order estimate, defined from k = 2 on
    std::optional<Scalar> L;  // constant estimate
};

/// e_k = ||x_k - xbar|| for each trace record.
std::vector<Scalar> error_sequence(const IterationTrace& trace, const Vector& xbar);

/// r_{k+2} = (log e_{k+2} - log e_{k+1})/(log e_{k+1} - log e_k),
/// L_{k+2} = e_{k+2}/e_{k+1}^{r_{k+2}}. Natural logs. Errors below
/// 10^(20-digits) count as numerically zero and leave r, L absent.
std::vector<RateEstimate> estimate_rates(const std::vector<Scalar>& errors,
                                         const PrecisionContext& ctx);

/// Drops trailing errors below the 10^(20-digits) resolution floor (they
/// are indistinguishable from zero at the working precision). The leading
/// entry is always kept so a run started at the solution keeps its e_0 = 0.
std::vector<Scalar> trim_noise_tail(std::vector<Scalar> errors, const PrecisionContext& ctx);

/// Exact solution when registered, otherwise a Halley run at doubled
/// precision (tol 10^(-1.5*digits)) from the problem's registered start.
Vector reference_solution(const ProblemInstance& P, const SolveConfig& cfg);

/// CSV with columns k, x components, e_k, r_k, L_k; "-" for absent entries.
std::string rate_table_csv(const IterationTrace& trace, const Vector& xbar,
                           const PrecisionContext& ctx);

}  // namespace geq
