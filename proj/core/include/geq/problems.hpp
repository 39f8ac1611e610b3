#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geq/linalg.hpp"
#include "geq/scalar.hpp"

namespace geq {

struct UnknownProblem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Twice-differentiable single-valued part. `second_directional(x, h)` is the
/// matrix representing f''(x)(h), i.e. its action on v is f''(x)(h)(v).
struct SmoothMap {
    std::size_t dim_in = 0;
    std::size_t dim_out = 0;
    std::function<Vector(const Vector&)> eval;
    std::function<Matrix(const Vector&)> jacobian;
    std::function<Matrix(const Vector&, const Vector&)> second_directional;
};

/// Coordinate-wise pieces of the set-valued part.
///   ZeroMap: F_i(x) = {0}
///   F1:      [0,inf) at 0, {0} for x>0, empty for x<0
///   F2:      {-1} for x<0, [-1,1] at 0, {1} for x>0
enum class BranchKind { ZeroMap, F1, F2 };

struct SetValuedMap {
    std::vector<BranchKind> coords;
    std::size_t dim() const { return coords.size(); }
};

struct ProblemInstance {
    std::string name;
    PrecisionContext ctx;
    SmoothMap f;
    SetValuedMap F;
    std::optional<Vector> exact_solution;
    std::vector<std::pair<std::string, Scalar>> params;
    std::map<std::string, std::string> param_strings;  // for rebuilding at other precisions
    Vector default_start;

    std::size_t dim() const { return F.dim(); }
};

/// dist(0, f(x)+F(x)) as the Euclidean norm of per-coordinate distances;
/// +inf when some coordinate of F is empty (F1 with x_i < 0).
Scalar residual_distance(const ProblemInstance& P, const Vector& x);

/// Built-in benchmark instances: ex1i, ex1ii, ex2i, ex2ii.
/// `overrides` replaces named parameters (p, q1, q2) parsed at full precision.
ProblemInstance builtin(const std::string& name, const PrecisionContext& ctx,
                        const std::map<std::string, std::string>& overrides = {});

std::vector<std::string> builtin_names();

}  // namespace geq
