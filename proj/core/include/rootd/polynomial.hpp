#pragma once

#include <vector>

#include "rootd/mpreal.hpp"

namespace rootd {

/// Power-basis polynomial with exact integer coefficients (ascending powers).
/// Carrier for coefficient recurrences ahead of any rounding.
struct ExactPolynomial {
    std::vector<mpz_class> coeffs;  // coeffs[i] multiplies x^i; never empty

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

/// Normalizes trailing zero coefficients away; the zero polynomial is {0}.
ExactPolynomial make_exact(std::vector<mpz_class> coeffs);

/// First-kind Chebyshev polynomial of degree d, exact integer coefficients.
/// T0 = 1, T1 = x, T_{n+1} = 2 x T_n - T_{n-1}.
ExactPolynomial chebyshev_T(long d);

/// Exact evaluation at integer x (tests and diagnostics).
mpz_class eval_exact(const ExactPolynomial& p, long x);

/// Power-basis polynomial over fixed-precision reals.
struct Polynomial {
    std::vector<MPReal> coeffs;  // ascending powers; never empty
    PrecContext ctx;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

Polynomial make_polynomial(std::vector<MPReal> coeffs, const PrecContext& ctx);

/// Rounds each exact coefficient to ctx precision. Degree is preserved
/// (a Chebyshev-style leading coefficient cannot round to zero, and general
/// callers get the stated-degree contract of their input).
Polynomial round_coeffs(const ExactPolynomial& p, const PrecContext& ctx);

/// Re-rounds a polynomial's coefficients into another context. Widening is
/// exact; narrowing rounds to nearest.
Polynomial convert_to_context(const Polynomial& p, const PrecContext& ctx);

/// Horner-scheme value of p at x; every intermediate is rounded to p's
/// context precision. Non-finite results propagate to the caller.
MPReal horner_eval(const Polynomial& p, const MPReal& x);

/// Coefficient-wise derivative: c'[i] = (i+1) c[i+1]; degree max(d-1, 0).
Polynomial derivative(const Polynomial& p);

}  // namespace rootd
