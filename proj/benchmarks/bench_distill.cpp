#include <benchmark/benchmark.h>

#include "rootd/distill.hpp"

using namespace rootd;

static void BM_DistillT4(benchmark::State& state) {
    auto ctx = make_context(8);
    auto f = round_coeffs(chebyshev_T(4), ctx);
    MPReal a(-1L, ctx), b(1L, ctx);
    auto mesh = uniform_mesh(a, b, parse_decimal("0.1", ctx));
    auto cfg = make_map_config(f, a, b, 3);
    auto params = default_filter_params(ctx);
    for (auto _ : state) {
        auto rep = distill(cfg, mesh, params);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_DistillT4);

static void BM_DistillT40(benchmark::State& state) {
    unsigned threads = static_cast<unsigned>(state.range(0));
    auto ctx = make_context(30);
    auto f = convert_to_context(round_coeffs(chebyshev_T(40), make_context(8)), ctx);
    MPReal a(-1L, ctx), b(1L, ctx);
    auto mesh = uniform_mesh(a, b, parse_decimal("0.01", ctx));
    auto cfg = make_map_config(f, a, b, 5);
    FilterParams params{parse_decimal("0.1", ctx), pow10(-4, ctx), pow10(-7, ctx),
                        pow10(-8, ctx)};
    for (auto _ : state) {
        auto rep = distill(cfg, mesh, params, threads);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_DistillT40)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
