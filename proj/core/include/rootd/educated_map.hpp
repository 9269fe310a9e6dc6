#pragma once

#include <cstdint>
#include <optional>

#include "rootd/polynomial.hpp"

namespace rootd {

/// Either a finite map value or the explicit absent value assigned to
/// grid points the educated map ignores.
struct MapResult {
    std::optional<MPReal> value;

    bool is_null() const { return !value.has_value(); }
    const MPReal& numeric() const { return *value; }

    static MapResult null() { return MapResult{std::nullopt}; }
    static MapResult of(MPReal v) { return MapResult{std::move(v)}; }
};

/// The k-fold Newton composition on [a, b].
///
/// The composed map applies the Newton step k+1 times and has order of
/// convergence 2^(k+1) at simple roots. `fprime` is always the symbolic
/// derivative of `f`; use make_map_config to keep that invariant.
struct MapConfig {
    Polynomial f;
    Polynomial fprime;
    MPReal a;
    MPReal b;
    long k = 0;
    PrecContext ctx;

    std::uint64_t order() const;  // 2^(k+1)
};

MapConfig make_map_config(Polynomial f, MPReal a, MPReal b, long k);

/// Order of convergence of the k-fold map: 2^(k+1). k must be in [0, 62].
std::uint64_t order_of(long k);

/// One Newton step x - f(x)/f'(x), or Null when the step is not a finite
/// number (f'(x) = 0 included).
MapResult newton_step(const MapConfig& cfg, const MPReal& x);

/// The educated composed map g.
///
/// Applies k+1 Newton steps; any non-numeric intermediate yields Null.
/// The final value y is kept only when y lies in [a, b] and
/// |y - x| <= b - a; otherwise Null. The checks run on the composed value,
/// so intermediates may leave the interval and still come back.
MapResult educated_g(const MapConfig& cfg, const MPReal& x);

}  // namespace rootd
