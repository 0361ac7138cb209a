#include "takeuchi/big_float.hpp"

#include "takeuchi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace takeuchi {

namespace {

mpfr_prec_t checked(mpfr_prec_t p)
{
    if (p < BigFloat::kMinPrecision) throw DomainError("BigFloat precision below 64 bits");
    return p;
}

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

} // namespace

BigFloat::BigFloat()
{
    mpfr_init2(v_, kDefaultPrecision);
    mpfr_set_zero(v_, 1);
}

BigFloat BigFloat::zero(mpfr_prec_t precision) { return BigFloat(0L, precision); }

BigFloat::BigFloat(double v, mpfr_prec_t precision)
{
    mpfr_init2(v_, checked(precision));
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t precision)
{
    mpfr_init2(v_, checked(precision));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& v, mpfr_prec_t precision)
{
    mpfr_init2(v_, checked(precision));
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& v, mpfr_prec_t precision)
{
    mpfr_init2(v_, checked(precision));
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view decimal, mpfr_prec_t precision)
{
    BigFloat r = BigFloat::zero(precision);
    std::string s(decimal);
    char* end = nullptr;
    mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size())
        throw DomainError("not a decimal number: '" + s + "'");
    return r;
}

BigFloat::BigFloat(const BigFloat& o)
{
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept
{
    // Leave the moved-from object valid: swap with a fresh minimal value.
    mpfr_init2(v_, kMinPrecision);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(mpfr_prec_t precision) const
{
    BigFloat r = BigFloat::zero(precision);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(std::size_t digits) const
{
    if (is_nan()) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (digits == 0) digits = mpfr_get_str_ndigits(10, precision());
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    if (is_zero()) return "0";
    std::string sign;
    if (m.front() == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

std::string BigFloat::to_annotated_string() const
{
    return to_string() + "@" + std::to_string(static_cast<long>(precision()));
}

BigFloat BigFloat::parse_annotated(std::string_view text)
{
    auto at = text.rfind('@');
    if (at == std::string_view::npos) throw DomainError("missing precision annotation");
    long bits = std::stol(std::string(text.substr(at + 1)));
    return parse(text.substr(0, at), bits);
}

BigFloat& BigFloat::operator+=(const BigFloat& o)
{
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o)
{
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o)
{
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o)
{
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b)
{
    BigFloat r = BigFloat::zero(joint(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b)
{
    BigFloat r = BigFloat::zero(joint(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b)
{
    BigFloat r = BigFloat::zero(joint(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b)
{
    BigFloat r = BigFloat::zero(joint(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a)
{
    BigFloat r = BigFloat::zero(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b)
{
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

#define TAKEUCHI_UNARY(name, fn)                 \
    BigFloat name(const BigFloat& x)             \
    {                                            \
        BigFloat r = BigFloat::zero(x.precision());               \
        fn(r.get(), x.get(), MPFR_RNDN);         \
        return r;                                \
    }

TAKEUCHI_UNARY(exp, mpfr_exp)
TAKEUCHI_UNARY(log, mpfr_log)
TAKEUCHI_UNARY(log1p, mpfr_log1p)
TAKEUCHI_UNARY(sqrt, mpfr_sqrt)
TAKEUCHI_UNARY(abs, mpfr_abs)

#undef TAKEUCHI_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x)
{
    BigFloat r = BigFloat::zero(joint(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y)
{
    BigFloat r = BigFloat::zero(joint(x, y));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, long k)
{
    BigFloat r = BigFloat::zero(x.precision());
    mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

BigFloat pi(mpfr_prec_t precision)
{
    BigFloat r = BigFloat::zero(precision);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigFloat log_of(const BigInt& z, mpfr_prec_t precision)
{
    if (sgn(z) <= 0) throw DomainError("log of non-positive integer");
    // Guard bits absorb the rounding of the mantissa before the log.
    BigFloat x(z, precision + 32);
    return log(x).with_precision(precision);
}

BigFloat log_of(const BigRational& q, mpfr_prec_t precision)
{
    if (sgn(q) <= 0) throw DomainError("log of non-positive rational");
    return log_of(q.get_num(), precision) - log_of(q.get_den(), precision);
}

int agreeing_digits(const BigFloat& a, const BigFloat& b, int cap)
{
    if (a == b) return cap;
    BigFloat diff = abs(a - b);
    BigFloat scale = abs(a);
    if (scale.is_zero()) return 0;
    double rel = log(diff / scale).to_double() / std::log(10.0);
    if (!std::isfinite(rel)) return rel < 0 ? cap : 0;
    int d = static_cast<int>(std::floor(-rel));
    return std::clamp(d, 0, cap);
}

} // namespace takeuchi
