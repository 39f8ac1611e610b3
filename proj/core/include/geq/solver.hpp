#pragma once

#include <optional>

#include "geq/subproblem.hpp"

namespace geq {

struct ZeroDerivative : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Method { Newton, Halley };

struct SolveConfig {
    Method method = Method::Halley;
    int digits = 400;
    std::string tol = "1e-300";
    long max_iter = 200;
};

struct IterateRecord {
    long k = 0;
    Vector x;
    std::optional<Vector> u;  // Halley predictor, absent at k = 0
    Scalar residual;          // dist(0, f(x_k)+F(x_k)), +inf possible
    std::optional<Scalar> step_norm;
    long subproblem_solves = 0;
};

enum class SolveStatus { Converged, MaxIter, SubproblemFailure };

struct IterationTrace {
    std::string problem;
    SolveConfig config;
    std::vector<IterateRecord> records;
    SolveStatus status = SolveStatus::MaxIter;
    long total_subproblem_solves = 0;
    double wall_time = 0.0;
};

/// Outer iteration driver. P must be built under a context with
/// cfg.digits significant digits.
IterationTrace run(const ProblemInstance& P, const Vector& x0, const SolveConfig& cfg);

/// One step of the classical two-stage third-order scheme on a 1-D smooth map:
/// predictor u = x - f/f', corrector x+ = x - f/(f' + 1/2 f''(x)(u - x)).
std::pair<Scalar, Scalar> classical_halley_step(const SmoothMap& f, const Scalar& x_k,
                                                const PrecisionContext& ctx);

std::string method_name(Method m);
std::string status_name(SolveStatus s);

/// JSON serialization with scalars printed at the working digit count;
/// re-serializing a parsed trace reproduces the bytes exactly.
std::string trace_to_json(const IterationTrace& t, const PrecisionContext& ctx);
IterationTrace trace_from_json(const std::string& text);

/// CSV with columns k, x components, u components, residual, step_norm.
std::string trace_to_csv(const IterationTrace& t, const PrecisionContext& ctx);

}  // namespace geq
