#include <benchmark/benchmark.h>

#include "rootd/polynomial.hpp"

using namespace rootd;

static void BM_HornerChebyshev(benchmark::State& state) {
    long degree = state.range(0);
    long prec = state.range(1);
    auto ctx = make_context(prec);
    auto p = round_coeffs(chebyshev_T(degree), ctx);
    MPReal x(0.73, ctx);
    for (auto _ : state) {
        auto v = horner_eval(p, x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HornerChebyshev)
    ->Args({4, 8})
    ->Args({40, 8})
    ->Args({40, 30})
    ->Args({500, 100})
    ->Args({500, 5000});

static void BM_ChebyshevCoefficients(benchmark::State& state) {
    long degree = state.range(0);
    for (auto _ : state) {
        auto p = chebyshev_T(degree);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ChebyshevCoefficients)->Arg(40)->Arg(200)->Arg(500);
