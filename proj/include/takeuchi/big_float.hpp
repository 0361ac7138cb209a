#pragma once

#include "takeuchi/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace takeuchi {

/// RAII handle for an MPFR floating-point value. Every operation rounds to
/// nearest; binary operations produce the larger of the operand precisions.
class BigFloat {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 256;
    static constexpr mpfr_prec_t kMinPrecision = 64;

    /// Zero at the default precision.
    BigFloat();
    static BigFloat zero(mpfr_prec_t precision);
    BigFloat(double v, mpfr_prec_t precision = kDefaultPrecision);
    BigFloat(long v, mpfr_prec_t precision = kDefaultPrecision);
    BigFloat(int v, mpfr_prec_t precision = kDefaultPrecision) : BigFloat(static_cast<long>(v), precision) {}
    BigFloat(const BigInt& v, mpfr_prec_t precision = kDefaultPrecision);
    BigFloat(const BigRational& v, mpfr_prec_t precision = kDefaultPrecision);
    /// Decimal text such as "2.2394331040052607317547850" or "-1.5e-3".
    static BigFloat parse(std::string_view decimal, mpfr_prec_t precision = kDefaultPrecision);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    /// Same value rounded to a new precision.
    BigFloat with_precision(mpfr_prec_t precision) const;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Binary exponent e with 0.5 <= |x|/2^e < 1; meaningless for zero.
    long exponent2() const { return mpfr_get_exp(v_); }

    /// Scientific decimal with `digits` significant digits (0 = enough to round-trip).
    std::string to_string(std::size_t digits = 0) const;
    /// "<decimal>@<precision_bits>", parseable by parse_annotated.
    std::string to_annotated_string() const;
    static BigFloat parse_annotated(std::string_view text);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

private:
    mpfr_t v_;
};

BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long k);
BigFloat pi(mpfr_prec_t precision);
/// Natural log of a positive big integer at the given precision. The integer is
/// rounded to a `precision`-bit mantissa with a wide exponent before the log,
/// so numbers with thousands of digits never overflow.
BigFloat log_of(const BigInt& z, mpfr_prec_t precision);
BigFloat log_of(const BigRational& q, mpfr_prec_t precision);
/// Number of leading decimal digits on which a and b agree, relative to |a|,
/// capped at `cap`.
int agreeing_digits(const BigFloat& a, const BigFloat& b, int cap = 100000);

} // namespace takeuchi
