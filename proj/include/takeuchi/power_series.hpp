#pragma once

#include "takeuchi/errors.hpp"
#include "takeuchi/polynomial.hpp"
#include "takeuchi/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace takeuchi {

/// Power series c_0 + c_1 z + ... + c_K z^K modulo z^(K+1), exact coefficients.
///
/// Binary operations truncate to the smaller order of their operands, so a
/// result is never claimed beyond what both inputs determine.
template <class T>
class TruncatedPowerSeries {
public:
    TruncatedPowerSeries() = default;
    /// Zero series of order K.
    explicit TruncatedPowerSeries(std::size_t order) : c_(order + 1) {}
    TruncatedPowerSeries(std::vector<T> coefficients, std::size_t order) : c_(std::move(coefficients))
    {
        c_.resize(order + 1);
    }

    static TruncatedPowerSeries constant(const T& value, std::size_t order)
    {
        TruncatedPowerSeries s(order);
        s.c_[0] = value;
        return s;
    }
    /// The series z (zero when order = 0).
    static TruncatedPowerSeries variable(std::size_t order)
    {
        TruncatedPowerSeries s(order);
        if (order >= 1) s.c_[1] = T(BigRational(1));
        return s;
    }
    static TruncatedPowerSeries from_polynomial(const Polynomial<T>& p, std::size_t order)
    {
        TruncatedPowerSeries s(order);
        for (std::size_t i = 0; i <= order && i < p.coefficients().size(); ++i) s.c_[i] = p.coefficients()[i];
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const T& operator[](std::size_t i) const { return c_.at(i); }
    T& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<T>& coefficients() const { return c_; }

    TruncatedPowerSeries truncated(std::size_t order) const
    {
        TruncatedPowerSeries r = *this;
        r.c_.resize(std::min(order, this->order()) + 1);
        return r;
    }

    TruncatedPowerSeries& operator+=(const TruncatedPowerSeries& o)
    {
        c_.resize(std::min(order(), o.order()) + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncatedPowerSeries& operator-=(const TruncatedPowerSeries& o)
    {
        c_.resize(std::min(order(), o.order()) + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TruncatedPowerSeries& operator*=(const BigRational& s)
    {
        for (auto& a : c_) a *= s;
        return *this;
    }
    TruncatedPowerSeries scaled(const T& s) const
    {
        TruncatedPowerSeries r = *this;
        for (auto& a : r.c_) a = a * s;
        return r;
    }

    friend TruncatedPowerSeries operator+(TruncatedPowerSeries a, const TruncatedPowerSeries& b) { return a += b; }
    friend TruncatedPowerSeries operator-(TruncatedPowerSeries a, const TruncatedPowerSeries& b) { return a -= b; }
    friend TruncatedPowerSeries operator-(TruncatedPowerSeries a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend TruncatedPowerSeries operator*(TruncatedPowerSeries a, const BigRational& s) { return a *= s; }
    friend TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b)
    {
        using takeuchi::is_zero;
        const std::size_t k = std::min(a.order(), b.order());
        TruncatedPowerSeries r(k);
        for (std::size_t i = 0; i <= k; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= k; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    /// Coefficientwise equality through the common order.
    friend bool operator==(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b)
    {
        return !first_difference(a, b).has_value();
    }

    /// Lowest order at which the two series differ, within their common order.
    friend std::optional<std::size_t> first_difference(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b)
    {
        const std::size_t k = std::min(a.order(), b.order());
        for (std::size_t i = 0; i <= k; ++i)
            if (!(a.c_[i] == b.c_[i])) return i;
        return std::nullopt;
    }

    /// z^shift · this, keeping the order.
    TruncatedPowerSeries shifted_up(std::size_t shift) const
    {
        TruncatedPowerSeries r(order());
        for (std::size_t i = 0; i + shift <= order(); ++i) r.c_[i + shift] = c_[i];
        return r;
    }
    /// (this − c_0)/z; the order drops by one.
    TruncatedPowerSeries divided_by_z() const
    {
        using takeuchi::is_zero;
        if (!is_zero(c_[0])) throw DomainError("series with nonzero constant term is not divisible by z");
        if (order() == 0) throw DepthError("cannot divide an order-0 series by z");
        return TruncatedPowerSeries(std::vector<T>(c_.begin() + 1, c_.end()), order() - 1);
    }

    TruncatedPowerSeries derivative() const
    {
        if (order() == 0) return TruncatedPowerSeries(0);
        TruncatedPowerSeries r(order() - 1);
        for (std::size_t i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * BigRational(static_cast<long>(i));
        return r;
    }
    /// Antiderivative with zero constant term; the order grows by one.
    TruncatedPowerSeries integral() const
    {
        TruncatedPowerSeries r(order() + 1);
        for (std::size_t i = 0; i <= order(); ++i) r.c_[i + 1] = c_[i] * BigRational(1, static_cast<long>(i + 1));
        return r;
    }

private:
    std::vector<T> c_;
};

/// 1/f; the constant term must be a unit of T.
template <class T>
TruncatedPowerSeries<T> reciprocal(const TruncatedPowerSeries<T>& f)
{
    using takeuchi::inverse;
    using takeuchi::is_unit;
    if (!is_unit(f[0])) throw DomainError("reciprocal requires a unit constant term");
    const std::size_t k = f.order();
    T inv0 = inverse(f[0]);
    TruncatedPowerSeries<T> g(k);
    g[0] = inv0;
    for (std::size_t n = 1; n <= k; ++n) {
        T acc{};
        for (std::size_t j = 1; j <= n; ++j) acc += f[j] * g[n - j];
        g[n] = -(acc * inv0);
    }
    return g;
}

template <class T>
TruncatedPowerSeries<T> operator/(const TruncatedPowerSeries<T>& a, const TruncatedPowerSeries<T>& b)
{
    return a * reciprocal(b);
}

/// exp(f) for f with zero constant term, via e' = f' e.
template <class T>
TruncatedPowerSeries<T> exp_series(const TruncatedPowerSeries<T>& f)
{
    using takeuchi::is_zero;
    if (!is_zero(f[0])) throw DomainError("exp_series requires zero constant term");
    const std::size_t k = f.order();
    TruncatedPowerSeries<T> e(k);
    e[0] = T(BigRational(1));
    for (std::size_t n = 1; n <= k; ++n) {
        T acc{};
        for (std::size_t j = 1; j <= n; ++j) {
            if (is_zero(f[j])) continue;
            acc += f[j] * e[n - j] * BigRational(static_cast<long>(j));
        }
        e[n] = acc * BigRational(1, static_cast<long>(n));
    }
    return e;
}

/// log(f) for f with constant term 1.
template <class T>
TruncatedPowerSeries<T> log_series(const TruncatedPowerSeries<T>& f)
{
    if (!(f[0] == T(BigRational(1)))) throw DomainError("log_series requires constant term 1");
    if (f.order() == 0) return TruncatedPowerSeries<T>(0);
    auto q = f.derivative() * reciprocal(f.truncated(f.order() - 1));
    return q.integral();
}

/// f^alpha = exp(alpha·log f) for f with constant term 1 and any exact exponent.
template <class T>
TruncatedPowerSeries<T> pow_series(const TruncatedPowerSeries<T>& f, const T& alpha)
{
    return exp_series(log_series(f).scaled(alpha));
}

/// f^n for a non-negative integer n by repeated squaring.
template <class T>
TruncatedPowerSeries<T> pow_series(const TruncatedPowerSeries<T>& f, unsigned long n)
{
    auto result = TruncatedPowerSeries<T>::constant(T(BigRational(1)), f.order());
    auto base = f;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

/// f(g(z)) through the common order. g must have zero constant term.
template <class T>
TruncatedPowerSeries<T> series_compose(const TruncatedPowerSeries<T>& f, const TruncatedPowerSeries<T>& g)
{
    using takeuchi::is_zero;
    if (!is_zero(g[0])) throw DomainError("series_compose requires zero constant term in the inner series");
    const std::size_t k = std::min(f.order(), g.order());
    auto inner = g.truncated(k);
    TruncatedPowerSeries<T> acc(k);
    for (std::size_t i = k + 1; i-- > 0;) {
        acc = acc * inner;
        acc[0] += f[i];
    }
    return acc;
}

/// sqrt(1 − 4z) = Σ binom(1/2, n)(−4)^n z^n.
TruncatedPowerSeries<BigRational> series_sqrt_one_minus_4z(std::size_t order);
/// C(z) = (1 − sqrt(1 − 4z))/(2z), coefficients are the Catalan numbers.
TruncatedPowerSeries<BigRational> series_catalan(std::size_t order);

template <class T>
std::string to_string(const TruncatedPowerSeries<T>& s)
{
    using takeuchi::to_string;
    std::string out = "[";
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i) out += ", ";
        out += to_string(s[i]);
    }
    return out + "] + O(z^" + std::to_string(s.order() + 1) + ")";
}

} // namespace takeuchi
