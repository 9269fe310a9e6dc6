#include "rootd/mpreal.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace rootd {

PrecContext make_context(long prec_digits) {
    if (prec_digits < 1) {
        throw std::invalid_argument("make_context: prec_digits must be >= 1");
    }
    // ceil(prec_digits * log2(10)) computed in 128-bit arithmetic so the
    // contract is exact for any sane digit count.
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_ui(t, 10, MPFR_RNDN);
    mpfr_log2(t, t, MPFR_RNDU);
    mpfr_mul_si(t, t, prec_digits, MPFR_RNDU);
    mpfr_ceil(t, t);
    long bits = mpfr_get_si(t, MPFR_RNDN);
    mpfr_clear(t);

    PrecContext ctx;
    ctx.prec_digits = prec_digits;
    ctx.prec_bits = static_cast<mpfr_prec_t>(bits) + 8;
    return ctx;
}

MPReal::MPReal() { mpfr_init2(v_, MPFR_PREC_MIN); }

MPReal::MPReal(const PrecContext& ctx) {
    mpfr_init2(v_, ctx.prec_bits);
    mpfr_set_zero(v_, 1);
}

MPReal::MPReal(long v, const PrecContext& ctx) {
    mpfr_init2(v_, ctx.prec_bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

MPReal::MPReal(double v, const PrecContext& ctx) {
    mpfr_init2(v_, ctx.prec_bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

MPReal::MPReal(const mpz_class& v, const PrecContext& ctx) {
    mpfr_init2(v_, ctx.prec_bits);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

MPReal::MPReal(const MPReal& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

MPReal::MPReal(MPReal&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

MPReal& MPReal::operator=(const MPReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

MPReal& MPReal::operator=(MPReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
    }
    return *this;
}

MPReal::~MPReal() { mpfr_clear(v_); }

namespace {

mpfr_prec_t result_prec(const MPReal& a, const MPReal& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

MPReal operator+(const MPReal& a, const MPReal& b) {
    MPReal r;
    mpfr_set_prec(r.raw(), result_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

MPReal operator-(const MPReal& a, const MPReal& b) {
    MPReal r;
    mpfr_set_prec(r.raw(), result_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

MPReal operator*(const MPReal& a, const MPReal& b) {
    MPReal r;
    mpfr_set_prec(r.raw(), result_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

MPReal operator/(const MPReal& a, const MPReal& b) {
    MPReal r;
    mpfr_set_prec(r.raw(), result_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

MPReal operator-(const MPReal& a) {
    MPReal r;
    mpfr_set_prec(r.raw(), a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

bool is_numeric(const MPReal& v) { return mpfr_number_p(v.raw()) != 0; }

MPReal abs(const MPReal& v) {
    MPReal r;
    mpfr_set_prec(r.raw(), v.precision());
    mpfr_abs(r.raw(), v.raw(), MPFR_RNDN);
    return r;
}

MPReal fma(const MPReal& a, const MPReal& b, const MPReal& c) {
    MPReal r;
    mpfr_set_prec(r.raw(), std::max(result_prec(a, b), c.precision()));
    mpfr_fma(r.raw(), a.raw(), b.raw(), c.raw(), MPFR_RNDN);
    return r;
}

MPReal mul_si(const MPReal& a, long n) {
    MPReal r;
    mpfr_set_prec(r.raw(), a.precision());
    mpfr_mul_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}

MPReal parse_decimal(std::string_view s, const PrecContext& ctx) {
    if (s.empty()) {
        throw std::invalid_argument("parse_decimal: empty string");
    }
    // Reject words mpfr_strtofr would accept (inf, nan, hex prefixes).
    for (char c : s) {
        if (std::isalpha(static_cast<unsigned char>(c)) && c != 'e' && c != 'E') {
            throw std::invalid_argument("parse_decimal: not a decimal literal: " + std::string(s));
        }
    }
    std::string buf(s);
    MPReal r(ctx);
    char* end = nullptr;
    int invalid = mpfr_strtofr(r.raw(), buf.c_str(), &end, 10, MPFR_RNDN);
    (void)invalid;
    if (end != buf.c_str() + buf.size()) {
        throw std::invalid_argument("parse_decimal: trailing characters in: " + buf);
    }
    return r;
}

std::string to_decimal(const MPReal& v, long digits) {
    if (digits < 1) digits = 1;
    if (mpfr_nan_p(v.raw())) return "nan";
    if (mpfr_inf_p(v.raw())) return mpfr_sgn(v.raw()) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v.raw())) return "0";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v.raw(), MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;  // digit string, value 0.d * 10^exp10

    std::string out;
    if (exp10 >= 1 && exp10 <= digits + 2) {
        // Fixed form with the decimal point inside or just right of d.
        std::string ip = d.substr(0, static_cast<size_t>(exp10));
        std::string fp = exp10 < static_cast<mpfr_exp_t>(d.size()) ? d.substr(static_cast<size_t>(exp10)) : "";
        while (ip.size() < static_cast<size_t>(exp10)) ip += '0';
        out = ip;
        if (!fp.empty()) out += "." + fp;
    } else if (exp10 <= 0 && exp10 >= -3) {
        out = "0.";
        out.append(static_cast<size_t>(-exp10), '0');
        out += d;
    } else {
        // Scientific: d[0].d[1..] e (exp10-1)
        out = d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out += "e" + std::to_string(static_cast<long>(exp10 - 1));
    }
    return neg ? "-" + out : out;
}

MPReal pow10(long e, const PrecContext& ctx) {
    MPReal r(ctx);
    mpfr_set_ui(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

}  // namespace rootd
