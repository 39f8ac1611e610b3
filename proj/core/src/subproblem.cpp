#include "geq/subproblem.hpp"

namespace geq {

namespace {

std::vector<BranchState> legal_states(BranchKind kind) {
    switch (kind) {
        case BranchKind::ZeroMap: return {BranchState::Free};
        case BranchKind::F1: return {BranchState::Zero, BranchState::Pos};
        case BranchKind::F2: return {BranchState::Neg, BranchState::Zero, BranchState::Pos};
    }
    return {};
}

// 0 in g_i + F_i(x_i) written as g_i = target for the single-valued states.
// Only F2 contributes nonzero values (-1 on the negative side, +1 positive).
Scalar equality_target(BranchKind kind, BranchState st, const PrecisionContext& ctx) {
    if (kind == BranchKind::F2) {
        if (st == BranchState::Neg) return ctx.from_long(1);
        if (st == BranchState::Pos) return ctx.from_long(-1);
    }
    return ctx.zero();
}

struct Candidate {
    Vector x;
    BranchPattern pattern;
    Scalar residual;
    Scalar dist_to_base;
};

}  // namespace

SubproblemSolution solve_inclusion(const SubproblemSpec& S) {
    const std::size_t n = S.F.dim();
    if (S.B.rows() != n || S.B.cols() != n || S.c.dim() != n || S.base.dim() != n)
        throw DimensionMismatch("solve_inclusion: inconsistent dimensions");
    const PrecisionContext& ctx = S.ctx;

    for (std::size_t i = 0; i < n; ++i) {
        if (!S.c[i].is_finite() || !S.base[i].is_finite()) throw NoSolution("non-finite constant term");
        for (std::size_t j = 0; j < n; ++j)
            if (!S.B.at(i, j).is_finite()) throw NoSolution("non-finite linearization");
    }

    Scalar zero = ctx.zero();
    Scalar one = ctx.from_long(1);
    Scalar eq_tol = ctx.pow10(50 - ctx.digits()) * (one + euclidean_norm(S.c));

    std::vector<std::vector<BranchState>> options(n);
    for (std::size_t i = 0; i < n; ++i) options[i] = legal_states(S.F.coords[i]);

    std::optional<Candidate> best;

    std::vector<std::size_t> idx(n, 0);
    bool done = false;
    while (!done) {
        BranchPattern pat;
        pat.states.reserve(n);
        for (std::size_t i = 0; i < n; ++i) pat.states.push_back(options[i][idx[i]]);

        // Reduced linear system over the non-zero coordinates, d = x - base.
        std::vector<std::size_t> free_ix;
        for (std::size_t i = 0; i < n; ++i)
            if (pat.states[i] != BranchState::Zero) free_ix.push_back(i);

        bool feasible = true;
        Vector x(n, ctx);
        if (!free_ix.empty()) {
            const std::size_t m = free_ix.size();
            Matrix R(m, m, ctx);
            std::vector<Scalar> rhs_entries;
            rhs_entries.reserve(m);
            for (std::size_t a = 0; a < m; ++a) {
                std::size_t i = free_ix[a];
                for (std::size_t b = 0; b < m; ++b) R.at(a, b) = S.B.at(i, free_ix[b]);
                Scalar rhs = equality_target(S.F.coords[i], pat.states[i], ctx) - S.c[i];
                for (std::size_t j = 0; j < n; ++j)
                    if (pat.states[j] == BranchState::Zero) rhs += S.B.at(i, j) * S.base[j];
                rhs_entries.push_back(std::move(rhs));
            }
            try {
                Vector d = solve_linear(R, Vector(std::move(rhs_entries)), ctx);
                for (std::size_t a = 0; a < m; ++a) x[free_ix[a]] = S.base[free_ix[a]] + d[a];
            } catch (const SingularMatrix&) {
                feasible = false;
            }
        }

        if (feasible) {
            for (std::size_t i = 0; i < n && feasible; ++i) {
                if (!x[i].is_finite()) feasible = false;
            }
        }

        if (feasible) {
            // Strict sign constraints, exact comparisons.
            for (std::size_t i = 0; i < n && feasible; ++i) {
                switch (pat.states[i]) {
                    case BranchState::Neg: feasible = x[i] < zero; break;
                    case BranchState::Pos: feasible = x[i] > zero; break;
                    default: break;
                }
            }
        }

        Scalar residual = zero;
        if (feasible) {
            Vector g = S.c + S.B * (x - S.base);
            for (std::size_t i = 0; i < n && feasible; ++i) {
                if (pat.states[i] == BranchState::Zero) {
                    if (S.F.coords[i] == BranchKind::F1) {
                        feasible = g[i] <= zero;
                    } else {
                        feasible = abs(g[i]) <= one;
                    }
                } else {
                    Scalar r = abs(g[i] - equality_target(S.F.coords[i], pat.states[i], ctx));
                    if (r > residual) residual = r;
                    if (!(r <= eq_tol)) feasible = false;
                }
            }
        }

        if (feasible) {
            Scalar dist = euclidean_norm(x - S.base);
            if (!best || dist < best->dist_to_base) {
                best = Candidate{x, pat, residual, dist};
            }
        }

        // Advance the odometer; the last coordinate varies fastest so the
        // first feasible minimum wins in lexicographic order.
        std::size_t pos = n;
        while (pos-- > 0) {
            if (++idx[pos] < options[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) done = true;
        }
        if (n == 0) done = true;
    }

    if (!best) throw NoSolution("no feasible branch pattern");
    return SubproblemSolution{best->x, best->pattern, best->residual};
}

SubproblemSpec newton_operator(const ProblemInstance& P, const Vector& x_k) {
    return SubproblemSpec{P.f.eval(x_k), P.f.jacobian(x_k), x_k, P.F, P.ctx};
}

SubproblemSpec halley_operator(const ProblemInstance& P, const Vector& x_k, const Vector& u_next) {
    Scalar half = P.ctx.from_double(0.5);
    Matrix B = P.f.jacobian(x_k) + half * P.f.second_directional(x_k, u_next - x_k);
    return SubproblemSpec{P.f.eval(x_k), std::move(B), x_k, P.F, P.ctx};
}

}  // namespace geq
