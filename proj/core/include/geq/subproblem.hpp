#pragma once

#include "geq/problems.hpp"

namespace geq {

struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Partially linearized inclusion 0 in c + B(x - base) + F(x).
struct SubproblemSpec {
    Vector c;
    Matrix B;
    Vector base;
    SetValuedMap F;
    PrecisionContext ctx;
};

/// Per-coordinate branch selection. Legal states: ZeroMap -> Free;
/// F1 -> Zero | Pos; F2 -> Neg | Zero | Pos.
enum class BranchState { Neg, Zero, Pos, Free };

struct BranchPattern {
    std::vector<BranchState> states;
    bool operator==(const BranchPattern&) const = default;
};

struct SubproblemSolution {
    Vector x;
    BranchPattern pattern;
    Scalar verified_residual;
};

/// Exhaustive branch-pattern enumeration. Among feasible candidates returns
/// the one nearest to `base` (Euclidean), ties broken by lexicographic
/// pattern order with Neg < Zero < Pos. Throws NoSolution when no pattern is
/// feasible.
SubproblemSolution solve_inclusion(const SubproblemSpec& S);

/// Linearization for the Josephy-Newton step: c = f(x_k), B = f'(x_k).
SubproblemSpec newton_operator(const ProblemInstance& P, const Vector& x_k);

/// Linearization for the Halley-type corrector:
/// B = f'(x_k) + 1/2 f''(x_k)(u_next - x_k).
SubproblemSpec halley_operator(const ProblemInstance& P, const Vector& x_k, const Vector& u_next);

}  // namespace geq
