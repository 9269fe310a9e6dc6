#pragma once

#include <vector>

#include "rootd/polynomial.hpp"

namespace rootd {

/// Closed-form Chebyshev root cos((2j+1)pi/(2d)).
struct OracleRoot {
    MPReal value;
    long index_j;
};

/// All closed-form roots of the degree-d first-kind Chebyshev polynomial
/// inside [a, b], ascending. cos and pi are computed with 8 extra decimal
/// digits and then rounded to ctx precision.
std::vector<OracleRoot> chebyshev_roots(long d, const MPReal& a, const MPReal& b,
                                        const PrecContext& ctx);

struct BisectionStats {
    long iterations = 0;
};

/// Bisection on a sign-change bracket: midpoint of a bracket of width
/// <= target_tol. Rejects brackets without a sign change. Shares no
/// root-finding logic with the Newton-based pipeline.
MPReal bisection_refine(const Polynomial& f, const MPReal& x1, const MPReal& x2,
                        const MPReal& target_tol, BisectionStats* stats = nullptr);

}  // namespace rootd
