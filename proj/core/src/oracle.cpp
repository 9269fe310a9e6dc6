#include "rootd/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootd {

std::vector<OracleRoot> chebyshev_roots(long d, const MPReal& a, const MPReal& b,
                                        const PrecContext& ctx) {
    if (d < 1) {
        throw std::invalid_argument("chebyshev_roots: d must be >= 1");
    }
    if (!(a < b)) {
        throw std::invalid_argument("chebyshev_roots: requires a < b");
    }
    PrecContext guard = make_context(ctx.prec_digits + 8);

    MPReal pi(guard);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);

    std::vector<OracleRoot> out;
    for (long j = d - 1; j >= 0; --j) {  // descending j = ascending value
        MPReal theta = mul_si(pi, 2 * j + 1);
        mpfr_div_si(theta.raw(), theta.raw(), 2 * d, MPFR_RNDN);
        MPReal cg(guard);
        mpfr_cos(cg.raw(), theta.raw(), MPFR_RNDN);
        MPReal v(ctx);
        mpfr_set(v.raw(), cg.raw(), MPFR_RNDN);
        if (v >= a && v <= b) {
            out.push_back(OracleRoot{std::move(v), j});
        }
    }
    return out;
}

MPReal bisection_refine(const Polynomial& f, const MPReal& x1, const MPReal& x2,
                        const MPReal& target_tol, BisectionStats* stats) {
    if (mpfr_sgn(target_tol.raw()) <= 0) {
        throw std::invalid_argument("bisection_refine: target_tol must be > 0");
    }
    if (!(x1 < x2)) {
        throw std::invalid_argument("bisection_refine: requires x1 < x2");
    }
    int s1 = mpfr_sgn(horner_eval(f, x1).raw());
    int s2 = mpfr_sgn(horner_eval(f, x2).raw());
    if (s1 * s2 >= 0) {
        throw std::invalid_argument("bisection_refine: no sign change at bracket endpoints");
    }

    MPReal lo = x1;
    MPReal hi = x2;
    long iters = 0;
    MPReal two(2L, f.ctx);
    while (hi - lo > target_tol) {
        MPReal mid = (lo + hi) / two;
        if (mid <= lo || mid >= hi) break;  // bracket at rounding resolution
        ++iters;
        int sm = mpfr_sgn(horner_eval(f, mid).raw());
        if (sm == 0) {
            lo = mid;
            hi = mid;
            break;
        }
        if (sm == s1) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (stats) stats->iterations = iters;
    return (lo + hi) / two;
}

}  // namespace rootd
