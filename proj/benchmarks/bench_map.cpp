#include <benchmark/benchmark.h>

#include "rootd/educated_map.hpp"

using namespace rootd;

// One composed-map evaluation: k+1 Newton steps, two Horner runs each.
static void BM_EducatedMap(benchmark::State& state) {
    long degree = state.range(0);
    long prec = state.range(1);
    long k = state.range(2);
    auto ctx = make_context(prec);
    auto f = round_coeffs(chebyshev_T(degree), ctx);
    auto cfg = make_map_config(f, MPReal(-1L, ctx), MPReal(1L, ctx), k);
    MPReal x(0.42, ctx);
    for (auto _ : state) {
        auto y = educated_g(cfg, x);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_EducatedMap)
    ->Args({4, 8, 3})
    ->Args({40, 30, 6})
    ->Args({500, 100, 10})
    ->Args({500, 5000, 20});
