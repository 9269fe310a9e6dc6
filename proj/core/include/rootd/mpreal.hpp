#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace rootd {

/// Fixed working precision shared by every value and operation of a run.
///
/// The contract is expressed in decimal significant digits; arithmetic is
/// carried out in binary at prec_bits = ceil(prec_digits * log2(10)) + 8.
/// The 8 guard bits keep the decimal-digit contract independent of binary
/// rounding at the edges.
struct PrecContext {
    long prec_digits = 0;
    mpfr_prec_t prec_bits = 0;
};

/// Builds a context for `prec_digits` decimal digits. Rejects digits < 1.
PrecContext make_context(long prec_digits);

/// Arbitrary-precision binary floating-point value.
///
/// Every value carries its own precision (assigned at construction from a
/// PrecContext) and every arithmetic result is rounded to the precision of
/// its operands (round-to-nearest-even), so results never silently widen.
/// Values are immutable in spirit: all operations produce new values, and
/// a constructed MPReal is safe to share across threads.
class MPReal {
  public:
    MPReal();                    // NaN at minimal precision; assign before use
    explicit MPReal(const PrecContext& ctx);              // 0 at ctx precision
    MPReal(long v, const PrecContext& ctx);
    MPReal(double v, const PrecContext& ctx);
    MPReal(const mpz_class& v, const PrecContext& ctx);

    MPReal(const MPReal& other);
    MPReal(MPReal&& other) noexcept;
    MPReal& operator=(const MPReal& other);
    MPReal& operator=(MPReal&& other) noexcept;
    ~MPReal();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    friend MPReal operator+(const MPReal& a, const MPReal& b);
    friend MPReal operator-(const MPReal& a, const MPReal& b);
    friend MPReal operator*(const MPReal& a, const MPReal& b);
    friend MPReal operator/(const MPReal& a, const MPReal& b);
    friend MPReal operator-(const MPReal& a);

    friend bool operator==(const MPReal& a, const MPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const MPReal& a, const MPReal& b) { return mpfr_lessgreater_p(a.v_, b.v_) != 0; }
    friend bool operator<(const MPReal& a, const MPReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const MPReal& a, const MPReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const MPReal& a, const MPReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const MPReal& a, const MPReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  private:
    mpfr_t v_;
};

/// True iff v is finite (neither NaN nor +-infinity).
bool is_numeric(const MPReal& v);

MPReal abs(const MPReal& v);

/// a*b + c in a single rounding, at the operands' precision.
MPReal fma(const MPReal& a, const MPReal& b, const MPReal& c);

/// a * n at a's precision.
MPReal mul_si(const MPReal& a, long n);

/// Nearest representable value of a decimal literal at ctx precision.
/// The whole string must be a valid signed decimal number, optionally with
/// an exponent part; anything else throws std::invalid_argument.
MPReal parse_decimal(std::string_view s, const PrecContext& ctx);

/// Decimal rendering with `digits` significant digits. Values with small
/// decimal exponent print in fixed form ("0.10000000"), others in
/// scientific form ("5.4975581e11"). Non-finite values print as "nan",
/// "inf", "-inf".
std::string to_decimal(const MPReal& v, long digits);

/// 10^e at ctx precision.
MPReal pow10(long e, const PrecContext& ctx);

}  // namespace rootd
