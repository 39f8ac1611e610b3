#include "geq/problems.hpp"

namespace geq {

Scalar residual_distance(const ProblemInstance& P, const Vector& x) {
    if (x.dim() != P.dim()) throw DimensionMismatch("residual_distance: dimension mismatch");
    const PrecisionContext& ctx = P.ctx;
    Vector fx = P.f.eval(x);
    Scalar zero = ctx.zero();
    Scalar one = ctx.from_long(1);

    std::vector<Scalar> dists;
    dists.reserve(P.dim());
    for (std::size_t i = 0; i < P.dim(); ++i) {
        const Scalar& xi = x[i];
        const Scalar& fi = fx[i];
        Scalar d = zero;
        switch (P.F.coords[i]) {
            case BranchKind::ZeroMap:
                d = abs(fi);
                break;
            case BranchKind::F1:
                if (xi > zero) {
                    d = abs(fi);
                } else if (xi.is_zero()) {
                    d = fi > zero ? fi : zero;
                } else {
                    return Scalar::infinity(ctx.bits());
                }
                break;
            case BranchKind::F2:
                if (xi < zero) {
                    d = abs(fi - one);
                } else if (xi > zero) {
                    d = abs(fi + one);
                } else {
                    Scalar m = abs(fi) - one;
                    d = m > zero ? m : zero;
                }
                break;
        }
        dists.push_back(std::move(d));
    }
    return euclidean_norm(Vector(std::move(dists)));
}

namespace {

std::string param_string(const std::map<std::string, std::string>& overrides,
                         const std::string& name, const std::string& def) {
    auto it = overrides.find(name);
    return it == overrides.end() ? def : it->second;
}

SmoothMap sinh_shift_map(const PrecisionContext& ctx, Scalar shift) {
    // f(x) = sinh(x) + shift
    SmoothMap m;
    m.dim_in = m.dim_out = 1;
    m.eval = [shift](const Vector& x) {
        return Vector({sinh(x[0]) + shift});
    };
    m.jacobian = [ctx](const Vector& x) {
        Matrix J(1, 1, ctx);
        J.at(0, 0) = cosh(x[0]);
        return J;
    };
    m.second_directional = [ctx](const Vector& x, const Vector& h) {
        Matrix S(1, 1, ctx);
        S.at(0, 0) = sinh(x[0]) * h[0];
        return S;
    };
    return m;
}

SmoothMap exp_pair_map(const PrecisionContext& ctx, Scalar p, Scalar q1, Scalar q2) {
    // f(x1,x2) = (e^{x1-x2-p} - q1, e^{x1+x2-p} - q2)
    SmoothMap m;
    m.dim_in = m.dim_out = 2;
    m.eval = [p, q1, q2](const Vector& x) {
        Scalar a = exp(x[0] - x[1] - p);
        Scalar b = exp(x[0] + x[1] - p);
        return Vector({a - q1, b - q2});
    };
    m.jacobian = [ctx, p](const Vector& x) {
        Scalar a = exp(x[0] - x[1] - p);
        Scalar b = exp(x[0] + x[1] - p);
        Matrix J(2, 2, ctx);
        J.at(0, 0) = a;
        J.at(0, 1) = -a;
        J.at(1, 0) = b;
        J.at(1, 1) = b;
        return J;
    };
    m.second_directional = [ctx, p](const Vector& x, const Vector& h) {
        Scalar a = exp(x[0] - x[1] - p);
        Scalar b = exp(x[0] + x[1] - p);
        Scalar da = a * (h[0] - h[1]);
        Scalar db = b * (h[0] + h[1]);
        Matrix S(2, 2, ctx);
        S.at(0, 0) = da;
        S.at(0, 1) = -da;
        S.at(1, 0) = db;
        S.at(1, 1) = db;
        return S;
    };
    return m;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"ex1i", "ex1ii", "ex2i", "ex2ii"}; }

ProblemInstance builtin(const std::string& name, const PrecisionContext& ctx,
                        const std::map<std::string, std::string>& overrides) {
    if (name == "ex1i") {
        ProblemInstance P;
        P.name = name;
        P.ctx = ctx;
        P.f = sinh_shift_map(ctx, -(ctx.from_long(3) / ctx.from_long(8)));
        P.F = SetValuedMap{{BranchKind::F1}};
        P.exact_solution = Vector({asinh(ctx.from_long(3) / ctx.from_long(8))});
        P.default_start = Vector({ctx.from_long(6)});
        return P;
    }
    if (name == "ex1ii") {
        ProblemInstance P;
        P.name = name;
        P.ctx = ctx;
        P.f = sinh_shift_map(ctx, ctx.from_long(10));
        P.F = SetValuedMap{{BranchKind::F2}};
        P.exact_solution = Vector({-asinh(ctx.from_long(9))});
        P.default_start = Vector({ctx.from_long(-10)});
        return P;
    }
    if (name == "ex2i" || name == "ex2ii") {
        std::string ps = param_string(overrides, "p", name == "ex2i" ? "3" : "0");
        std::string q1s = param_string(overrides, "q1", name == "ex2i" ? "0.1" : "2.3");
        std::string q2s = param_string(overrides, "q2", name == "ex2i" ? "0.2" : "1");
        Scalar p = ctx.parse(ps);
        Scalar q1 = ctx.parse(q1s);
        Scalar q2 = ctx.parse(q2s);
        ProblemInstance P;
        P.name = name;
        P.ctx = ctx;
        P.f = exp_pair_map(ctx, p, q1, q2);
        P.params = {{"p", p}, {"q1", q1}, {"q2", q2}};
        P.param_strings = {{"p", ps}, {"q1", q1s}, {"q2", q2s}};
        if (name == "ex2i") {
            P.F = SetValuedMap{{BranchKind::ZeroMap, BranchKind::ZeroMap}};
            Scalar half = ctx.from_double(0.5);
            P.exact_solution = Vector({half * log(q1 * q2) + p, half * log(q2 / q1)});
            P.default_start = Vector({ctx.from_long(1), ctx.from_long(-1)});
        } else {
            P.F = SetValuedMap{{BranchKind::F2, BranchKind::F2}};
            P.default_start = Vector({ctx.from_long(1), ctx.from_long(1)});
        }
        return P;
    }
    throw UnknownProblem("unknown problem '" + name + "'");
}

}  // namespace geq
