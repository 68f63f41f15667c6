#include <benchmark/benchmark.h>

#include "strongk/exact_solver.hpp"
#include "strongk/isomorphism.hpp"
#include "strongk/poly_deciders.hpp"

using namespace strongk;

static void LambdaSCompleteK4(benchmark::State& state) {
    Digraph k4 = standard_family("complete_bidirected", 4);
    VertexSet s({0, 1});
    for (auto _ : state) {
        auto r = lambda_S_exact(k4, s);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(LambdaSCompleteK4);

static void LambdaSCompleteK5(benchmark::State& state) {
    Digraph k5 = standard_family("complete_bidirected", 5);
    VertexSet s({0, 1});
    for (auto _ : state) {
        auto r = lambda_S_exact(k5, s);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(LambdaSCompleteK5);

static void MinimalCandidatesK5(benchmark::State& state) {
    Digraph k5 = standard_family("complete_bidirected", 5);
    VertexSet s({0, 1});
    for (auto _ : state) {
        auto c = minimal_candidates(k5, s);
        benchmark::DoNotOptimize(c.size());
    }
}
BENCHMARK(MinimalCandidatesK5);

static void OracleK4(benchmark::State& state) {
    Digraph k4 = standard_family("complete_bidirected", 4);
    AssignmentOracle oracle(k4);
    VertexSet s({0, 1});
    for (auto _ : state) {
        int v = oracle.lambda_S(s);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(OracleK4);

static void ArcConnectivityK6(benchmark::State& state) {
    Digraph k6 = standard_family("complete_bidirected", 6);
    for (auto _ : state) {
        int v = arc_connectivity(k6);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(ArcConnectivityK6);

static void CanonicalKeyOrder5(benchmark::State& state) {
    Digraph d = standard_family("bidirected_cycle", 5);
    for (auto _ : state) {
        auto k = canonical_key(d);
        benchmark::DoNotOptimize(k.lo);
    }
}
BENCHMARK(CanonicalKeyOrder5);

BENCHMARK_MAIN();
