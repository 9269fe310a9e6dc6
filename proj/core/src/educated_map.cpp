#include "rootd/educated_map.hpp"

#include <stdexcept>

namespace rootd {

std::uint64_t order_of(long k) {
    if (k < 0 || k > 62) {
        throw std::invalid_argument("order_of: k must be in [0, 62]");
    }
    return std::uint64_t{1} << (k + 1);
}

std::uint64_t MapConfig::order() const { return order_of(k); }

MapConfig make_map_config(Polynomial f, MPReal a, MPReal b, long k) {
    if (!is_numeric(a) || !is_numeric(b) || !(a < b)) {
        throw std::invalid_argument("make_map_config: interval must satisfy a < b");
    }
    order_of(k);  // validates k
    Polynomial fp = derivative(f);
    PrecContext ctx = f.ctx;
    return MapConfig{std::move(f), std::move(fp), std::move(a), std::move(b), k, ctx};
}

MapResult newton_step(const MapConfig& cfg, const MPReal& x) {
    MPReal fx = horner_eval(cfg.f, x);
    MPReal fpx = horner_eval(cfg.fprime, x);
    MPReal y = x - fx / fpx;
    if (!is_numeric(y)) {
        return MapResult::null();
    }
    return MapResult::of(std::move(y));
}

MapResult educated_g(const MapConfig& cfg, const MPReal& x) {
    MPReal y = x;
    for (long i = 0; i <= cfg.k; ++i) {
        MapResult step = newton_step(cfg, y);
        if (step.is_null()) {
            return MapResult::null();
        }
        y = step.numeric();
    }
    if (y < cfg.a || y > cfg.b) {
        return MapResult::null();
    }
    MPReal span = cfg.b - cfg.a;
    if (abs(y - x) > span) {
        return MapResult::null();
    }
    return MapResult::of(std::move(y));
}

}  // namespace rootd
