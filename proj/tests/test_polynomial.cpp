#include <doctest.h>

#include <random>

#include "rootd/polynomial.hpp"

using namespace rootd;

TEST_CASE("chebyshev_T base cases and small degrees") {
    auto t0 = chebyshev_T(0);
    REQUIRE(t0.coeffs.size() == 1);
    CHECK(t0.coeffs[0] == 1);

    auto t1 = chebyshev_T(1);
    REQUIRE(t1.coeffs.size() == 2);
    CHECK(t1.coeffs[0] == 0);
    CHECK(t1.coeffs[1] == 1);

    auto t4 = chebyshev_T(4);  // 8x^4 - 8x^2 + 1
    REQUIRE(t4.degree() == 4);
    CHECK(t4.coeffs[0] == 1);
    CHECK(t4.coeffs[1] == 0);
    CHECK(t4.coeffs[2] == -8);
    CHECK(t4.coeffs[3] == 0);
    CHECK(t4.coeffs[4] == 8);
}

TEST_CASE("chebyshev_T degree 40 pinned coefficients") {
    auto t40 = chebyshev_T(40);
    CHECK(t40.coeffs[2] == -800);
    CHECK(t40.coeffs[40] == mpz_class("549755813888"));  // 2^39
    CHECK(t40.coeffs[40] == mpz_class(1) << 39);
}

TEST_CASE("chebyshev exactness at the endpoints for all degrees up to 600") {
    // T_d(1) = 1 and T_d(-1) = (-1)^d in exact integer arithmetic.
    for (long d = 0; d <= 600; d += (d < 60 ? 1 : 27)) {
        auto td = chebyshev_T(d);
        CHECK(eval_exact(td, 1) == 1);
        CHECK(eval_exact(td, -1) == (d % 2 == 0 ? 1 : -1));
    }
    auto t600 = chebyshev_T(600);
    CHECK(eval_exact(t600, 1) == 1);
    CHECK(eval_exact(t600, -1) == 1);
}

TEST_CASE("recurrence identity holds coefficient-wise") {
    for (long n : {1L, 2L, 7L, 25L, 99L}) {
        auto tn = chebyshev_T(n);
        auto tn1 = chebyshev_T(n - 1);
        auto tn2 = chebyshev_T(n + 1);
        REQUIRE(tn2.degree() == n + 1);
        for (long i = 0; i <= n + 1; ++i) {
            mpz_class expect = 0;
            if (i >= 1 && i - 1 <= tn.degree()) expect += 2 * tn.coeffs[static_cast<size_t>(i - 1)];
            if (i <= tn1.degree()) expect -= tn1.coeffs[static_cast<size_t>(i)];
            CHECK(tn2.coeffs[static_cast<size_t>(i)] == expect);
        }
    }
}

TEST_CASE("round_coeffs prints the expected 8-digit forms for T40") {
    auto ctx = make_context(8);
    auto p = round_coeffs(chebyshev_T(40), ctx);
    CHECK(to_decimal(p.coeffs[40], 8) == "5.4975581e11");
    CHECK(to_decimal(p.coeffs[38], 8) == "-5.4975581e12");
    CHECK(to_decimal(p.coeffs[2], 8) == "-800.00000");

    auto small = round_coeffs(chebyshev_T(4), ctx);
    CHECK(small.coeffs[4] == MPReal(8L, ctx));  // exactly representable
}

TEST_CASE("T40 coefficients are exactly representable at 35 bits") {
    // Every coefficient of T_d carries a factor 2^(i-1); the odd parts of
    // T40's coefficients need at most 25 bits, so prec-8 storage is exact.
    auto t40 = chebyshev_T(40);
    auto ctx = make_context(8);
    auto p = round_coeffs(t40, ctx);
    for (size_t i = 0; i < t40.coeffs.size(); ++i) {
        MPReal diff = p.coeffs[i] - MPReal(t40.coeffs[i], make_context(30));
        CHECK(diff.is_zero());
    }
}

TEST_CASE("horner_eval on T4") {
    auto ctx = make_context(8);
    auto p = round_coeffs(chebyshev_T(4), ctx);
    CHECK(horner_eval(p, MPReal(0L, ctx)) == MPReal(1L, ctx));
    CHECK(horner_eval(p, MPReal(1L, ctx)) == MPReal(1L, ctx));

    // cos(pi/8) is a root of T4; at prec 8 the value must vanish to 1e-7.
    PrecContext wide = make_context(30);
    MPReal theta(wide);
    mpfr_const_pi(theta.raw(), MPFR_RNDN);
    mpfr_div_si(theta.raw(), theta.raw(), 8, MPFR_RNDN);
    MPReal root(ctx);
    mpfr_cos(root.raw(), theta.raw(), MPFR_RNDN);
    CHECK(abs(horner_eval(p, root)) < pow10(-7, ctx));
}

TEST_CASE("horner agrees with naive evaluation at doubled precision") {
    auto ctx = make_context(15);
    auto wide = make_context(30);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> arg(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        long deg = 1 + static_cast<long>(rng() % 20);
        std::vector<MPReal> cs;
        for (long i = 0; i <= deg; ++i) cs.emplace_back(coeff(rng), ctx);
        auto p = make_polynomial(cs, ctx);
        MPReal x(arg(rng), ctx);

        MPReal h = horner_eval(p, x);

        // Naive powers-and-sum at doubled precision.
        MPReal acc(wide), xp(1L, wide), xw(wide);
        mpfr_set(xw.raw(), x.raw(), MPFR_RNDN);
        for (size_t i = 0; i < p.coeffs.size(); ++i) {
            MPReal cw(wide);
            mpfr_set(cw.raw(), p.coeffs[i].raw(), MPFR_RNDN);
            acc = acc + cw * xp;
            xp = xp * xw;
        }

        // within 2 units in the last place of working precision
        MPReal err = abs(h - acc);
        MPReal bound = abs(acc) + MPReal(1L, wide);
        mpfr_mul_2si(bound.raw(), bound.raw(), -static_cast<long>(ctx.prec_bits) + 2, MPFR_RNDN);
        CHECK(err <= bound);
    }
}

TEST_CASE("derivative power rule and degree bookkeeping") {
    auto ctx = make_context(8);
    auto p = round_coeffs(chebyshev_T(4), ctx);  // 8x^4 - 8x^2 + 1
    auto dp = derivative(p);                     // 32x^3 - 16x
    REQUIRE(dp.degree() == 3);
    CHECK(dp.coeffs[0].is_zero());
    CHECK(dp.coeffs[1] == MPReal(-16L, ctx));
    CHECK(dp.coeffs[2].is_zero());
    CHECK(dp.coeffs[3] == MPReal(32L, ctx));

    auto c = make_polynomial({MPReal(5L, ctx)}, ctx);
    auto dc = derivative(c);
    CHECK(dc.degree() == 0);
    CHECK(dc.coeffs[0].is_zero());

    // T40's leading derivative coefficient: 40 * 2^39
    auto t40 = round_coeffs(chebyshev_T(40), ctx);
    auto dt40 = derivative(t40);
    CHECK(dt40.coeffs[39] == MPReal(mpz_class("21990232555520"), make_context(20)));

    // double derivative drops degree by two
    for (long d : {0L, 1L, 2L, 5L, 9L}) {
        auto q = round_coeffs(chebyshev_T(d), ctx);
        CHECK(derivative(derivative(q)).degree() == std::max(d - 2, 0L));
    }
}

TEST_CASE("zero polynomial is normalized to degree 0") {
    auto ctx = make_context(8);
    auto z = make_polynomial({MPReal(ctx), MPReal(ctx), MPReal(ctx)}, ctx);
    CHECK(z.degree() == 0);
    CHECK(z.coeffs[0].is_zero());
}
