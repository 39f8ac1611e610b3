#include <benchmark/benchmark.h>

#include "geq/bench.hpp"
#include "geq/kantorovich.hpp"

using namespace geq;

static void BM_ScalarMul(benchmark::State& state) {
    PrecisionContext ctx(static_cast<int>(state.range(0)));
    Scalar a = ctx.parse("1.2345678901234567890123456789");
    Scalar b = ctx.parse("0.98765432109876543210987654321");
    for (auto _ : state) {
        Scalar c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ScalarMul)->Arg(120)->Arg(400)->Arg(800);

static void BM_Sinh(benchmark::State& state) {
    PrecisionContext ctx(static_cast<int>(state.range(0)));
    Scalar a = ctx.parse("2.5");
    for (auto _ : state) {
        Scalar c = sinh(a);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Sinh)->Arg(120)->Arg(400);

static void BM_SubproblemSolve2D(benchmark::State& state) {
    PrecisionContext ctx(static_cast<int>(state.range(0)));
    ProblemInstance P = builtin("ex2ii", ctx);
    Vector x({ctx.from_long(1), ctx.from_long(1)});
    for (auto _ : state) {
        auto sol = solve_inclusion(newton_operator(P, x));
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_SubproblemSolve2D)->Arg(120)->Arg(400);

static void BM_HalleySolveEx1i(benchmark::State& state) {
    PrecisionContext ctx(400);
    ProblemInstance P = builtin("ex1i", ctx);
    SolveConfig cfg;
    for (auto _ : state) {
        IterationTrace t = run(P, P.default_start, cfg);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_HalleySolveEx1i);

static void BM_MajorantRoots(benchmark::State& state) {
    PrecisionContext ctx(400);
    MajorantParams p{ctx.from_long(1), ctx.from_long(1), ctx.from_long(1), ctx.parse("0.1")};
    for (auto _ : state) {
        auto roots = roots_of_h(p, ctx);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_MajorantRoots);

BENCHMARK_MAIN();
