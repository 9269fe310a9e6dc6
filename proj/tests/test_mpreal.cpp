#include <doctest.h>

#include <random>
#include <thread>

#include "rootd/mpreal.hpp"

using namespace rootd;

TEST_CASE("make_context maps decimal digits to binary precision") {
    CHECK(make_context(8).prec_bits == 35);       // ceil(8 log2 10) = 27, +8
    CHECK(make_context(5000).prec_bits == 16618); // ceil(5000 log2 10) = 16610, +8
    CHECK(make_context(1).prec_bits == 12);       // ceil(log2 10) = 4, +8
    CHECK(make_context(30).prec_bits == 108);
    CHECK_THROWS_AS(make_context(0), std::invalid_argument);
    CHECK_THROWS_AS(make_context(-3), std::invalid_argument);
}

TEST_CASE("parse_decimal basics") {
    auto ctx = make_context(8);
    CHECK(parse_decimal("0", ctx).is_zero());
    CHECK(parse_decimal("-800.00000", ctx) == MPReal(-800L, ctx));  // exactly representable
    CHECK(to_decimal(parse_decimal("0.1", ctx), 8) == "0.10000000");
    CHECK(parse_decimal("1e3", ctx) == MPReal(1000L, ctx));
    CHECK(parse_decimal("-2.5E-1", ctx) == MPReal(-0.25, ctx));

    CHECK_THROWS_AS(parse_decimal("", ctx), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("abc", ctx), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("1.5x", ctx), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("inf", ctx), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal("nan", ctx), std::invalid_argument);
}

TEST_CASE("is_numeric distinguishes finite values from inf/nan") {
    auto ctx = make_context(8);
    MPReal one(1L, ctx), zero(0L, ctx);
    CHECK(is_numeric(MPReal(1.5, ctx)));
    CHECK_FALSE(is_numeric(one / zero));   // +inf
    CHECK_FALSE(is_numeric(zero / zero));  // nan
}

TEST_CASE("precision closure: results carry the context precision") {
    auto ctx = make_context(12);
    MPReal a(1L, ctx), b(3L, ctx);
    CHECK((a / b).precision() == ctx.prec_bits);
    CHECK((a + b).precision() == ctx.prec_bits);
    CHECK((a * b).precision() == ctx.prec_bits);
    CHECK(fma(a, b, a).precision() == ctx.prec_bits);
}

TEST_CASE("decimal round trip within one unit in the last place") {
    auto ctx = make_context(10);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        MPReal v(dist(rng), ctx);
        MPReal back = parse_decimal(to_decimal(v, ctx.prec_digits), ctx);
        // |v - back| <= 10^(exp10(v) - digits + 1)
        MPReal err = abs(v - back);
        MPReal scale = abs(v);
        MPReal ulp_dec = scale;
        mpfr_mul_d(ulp_dec.raw(), scale.raw(), 1e-9, MPFR_RNDN);
        CHECK(err <= ulp_dec);
    }
}

TEST_CASE("to_decimal formats fixed and scientific forms") {
    auto ctx = make_context(8);
    CHECK(to_decimal(MPReal(mpz_class("549755813888"), ctx), 8) == "5.4975581e11");
    CHECK(to_decimal(MPReal(-800L, ctx), 8) == "-800.00000");
    CHECK(to_decimal(MPReal(ctx), 8) == "0");
    CHECK(to_decimal(MPReal(0.0078125, ctx), 3) == "0.00781");
    CHECK(to_decimal(MPReal(0.0078125, ctx), 8) == "0.0078125000");
}

TEST_CASE("arithmetic is deterministic across threads") {
    auto ctx = make_context(50);
    auto work = [&]() {
        MPReal acc(1L, ctx);
        MPReal x(0.7, ctx);
        for (int i = 0; i < 1000; ++i) {
            acc = fma(acc, x, MPReal(1L, ctx));
        }
        return to_decimal(acc, 50);
    };
    std::string expected = work();
    std::vector<std::string> got(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t]() { got[t] = work(); });
    }
    for (auto& th : pool) th.join();
    for (const auto& s : got) CHECK(s == expected);
}
