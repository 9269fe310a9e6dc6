#include "rootd/polynomial.hpp"

#include <stdexcept>

namespace rootd {

ExactPolynomial make_exact(std::vector<mpz_class> coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) {
        coeffs.pop_back();
    }
    if (coeffs.empty()) {
        coeffs.emplace_back(0);
    }
    return ExactPolynomial{std::move(coeffs)};
}

ExactPolynomial chebyshev_T(long d) {
    if (d < 0) {
        throw std::invalid_argument("chebyshev_T: degree must be >= 0");
    }
    std::vector<mpz_class> prev{1};     // T0
    if (d == 0) return ExactPolynomial{std::move(prev)};
    std::vector<mpz_class> cur{0, 1};   // T1
    for (long n = 1; n < d; ++n) {
        std::vector<mpz_class> next(static_cast<size_t>(n) + 2);
        for (size_t i = 0; i <= static_cast<size_t>(n); ++i) {
            next[i + 1] += 2 * cur[i];
        }
        for (size_t i = 0; i < prev.size(); ++i) {
            next[i] -= prev[i];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return ExactPolynomial{std::move(cur)};
}

mpz_class eval_exact(const ExactPolynomial& p, long x) {
    mpz_class acc = 0;
    for (size_t i = p.coeffs.size(); i-- > 0;) {
        acc = acc * x + p.coeffs[i];
    }
    return acc;
}

Polynomial make_polynomial(std::vector<MPReal> coeffs, const PrecContext& ctx) {
    while (coeffs.size() > 1 && coeffs.back().is_zero()) {
        coeffs.pop_back();
    }
    if (coeffs.empty()) {
        coeffs.emplace_back(ctx);
    }
    return Polynomial{std::move(coeffs), ctx};
}

Polynomial round_coeffs(const ExactPolynomial& p, const PrecContext& ctx) {
    std::vector<MPReal> coeffs;
    coeffs.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) {
        coeffs.emplace_back(c, ctx);
    }
    return Polynomial{std::move(coeffs), ctx};
}

Polynomial convert_to_context(const Polynomial& p, const PrecContext& ctx) {
    std::vector<MPReal> coeffs;
    coeffs.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) {
        MPReal r(ctx);
        mpfr_set(r.raw(), c.raw(), MPFR_RNDN);
        coeffs.push_back(std::move(r));
    }
    return Polynomial{std::move(coeffs), ctx};
}

MPReal horner_eval(const Polynomial& p, const MPReal& x) {
    MPReal acc(p.ctx);
    mpfr_set(acc.raw(), p.coeffs.back().raw(), MPFR_RNDN);
    for (size_t i = p.coeffs.size() - 1; i-- > 0;) {
        mpfr_fma(acc.raw(), acc.raw(), x.raw(), p.coeffs[i].raw(), MPFR_RNDN);
    }
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() == 0) {
        return make_polynomial({MPReal(p.ctx)}, p.ctx);
    }
    std::vector<MPReal> coeffs;
    coeffs.reserve(p.coeffs.size() - 1);
    for (size_t i = 1; i < p.coeffs.size(); ++i) {
        coeffs.push_back(mul_si(p.coeffs[i], static_cast<long>(i)));
    }
    return make_polynomial(std::move(coeffs), p.ctx);
}

}  // namespace rootd
