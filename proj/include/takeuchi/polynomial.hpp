#pragma once

#include "takeuchi/errors.hpp"
#include "takeuchi/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace takeuchi {

/// Dense univariate polynomial with exact coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial has no
/// coefficients and degree() == -1. T must provide ring operators, construction
/// from BigRational, multiplication by BigRational, and a free is_zero().
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }
    /// Constant polynomial.
    Polynomial(const BigRational& constant) : c_{T(constant)} { trim(); }
    Polynomial(long constant) : Polynomial(BigRational(constant)) {}

    static Polynomial monomial(const T& coefficient, std::size_t degree)
    {
        std::vector<T> c(degree + 1);
        c[degree] = coefficient;
        return Polynomial(std::move(c));
    }
    /// The polynomial x.
    static Polynomial x() { return monomial(T(BigRational(1)), 1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coefficients() const { return c_; }
    /// Coefficient of x^i; zero beyond the degree.
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(); }
    const T& leading() const { return c_.back(); }

    template <class X>
    X evaluate(const X& x) const
    {
        X acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const BigRational& s)
    {
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }
    /// Adds s·p without materializing the product.
    void add_scaled(const T& s, const Polynomial& p)
    {
        if (takeuchi_is_zero(s)) return;
        if (p.c_.size() > c_.size()) c_.resize(p.c_.size());
        for (std::size_t i = 0; i < p.c_.size(); ++i) c_[i] += s * p.c_[i];
        trim();
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (takeuchi_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
    friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// p(x) -> p(x + shift) by the Horner-based Taylor shift, O(deg²) ring operations.
    Polynomial taylor_shift(const BigRational& shift) const
    {
        std::vector<T> a = c_;
        const std::size_t n = a.size();
        if (n < 2 || sgn(shift) == 0) return *this;
        const bool unit = shift == 1 || shift == -1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = n - 1; j-- > i;) {
                if (!unit) a[j] += a[j + 1] * shift;
                else if (sgn(shift) > 0) a[j] += a[j + 1];
                else a[j] -= a[j + 1];
            }
        }
        return Polynomial(std::move(a));
    }

    /// Exact division by the monomial x, valid only when the constant term is zero.
    Polynomial divide_by_x() const
    {
        if (is_zero()) return {};
        if (!takeuchi_is_zero(c_[0])) throw DomainError("polynomial not divisible by x");
        return Polynomial(std::vector<T>(c_.begin() + 1, c_.end()));
    }

private:
    static bool takeuchi_is_zero(const T& v)
    {
        using takeuchi::is_zero;
        return is_zero(v);
    }
    void trim()
    {
        while (!c_.empty() && takeuchi_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
bool is_zero(const Polynomial<T>& p)
{
    return p.is_zero();
}

/// Units of a polynomial ring over a field are the nonzero constants.
template <class T>
bool is_unit(const Polynomial<T>& p)
{
    return p.degree() == 0;
}

template <class T>
Polynomial<T> inverse(const Polynomial<T>& p)
{
    if (!is_unit(p)) throw DomainError("polynomial is not a unit");
    using takeuchi::inverse;
    return Polynomial<T>(std::vector<T>{inverse(p[0])});
}

/// Rational polynomials in the formal parameter λ; the coefficient ring ℚ[λ].
using LambdaPoly = Polynomial<BigRational>;

/// q(m) = p(m − 1).
template <class T>
Polynomial<T> poly_shift_argument(const Polynomial<T>& p)
{
    return p.taylor_shift(BigRational(-1));
}

/// Text form "[c0, c1, ...]" with exact coefficients.
template <class T>
std::string to_string(const Polynomial<T>& p)
{
    using takeuchi::to_string;
    std::string s = "[";
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i) s += ", ";
        s += to_string(p.coefficients()[i]);
    }
    return s + "]";
}

/// Unique polynomial of degree < points.size() through (node, value) pairs.
/// Newton divided differences over exact arithmetic. Duplicate nodes are a DomainError.
template <class T>
Polynomial<T> lagrange_interpolate(const std::vector<std::pair<BigRational, T>>& points)
{
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw DomainError("duplicate interpolation node " + to_string(points[i].first));
    std::vector<T> dd;
    dd.reserve(n);
    for (const auto& p : points) dd.push_back(p.second);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            BigRational inv = BigRational(1) / BigRational(points[i].first - points[i - j].first);
            dd[i] = (dd[i] - dd[i - 1]) * inv;
        }
    }
    // Horner expansion of the Newton form into the monomial basis.
    std::vector<T> acc;
    for (std::size_t i = n; i-- > 0;) {
        std::vector<T> next(acc.size() + 1);
        for (std::size_t t = 0; t < acc.size(); ++t) {
            next[t + 1] += acc[t];
            next[t] -= acc[t] * points[i].first;
        }
        next[0] += dd[i];
        acc = std::move(next);
    }
    return Polynomial<T>(std::move(acc));
}

/// binom(alpha, k) = alpha (alpha-1) ... (alpha-k+1) / k!, exact in the domain of alpha.
template <class T>
T binomial_general(const T& alpha, unsigned long k)
{
    T acc(BigRational(1));
    for (unsigned long j = 0; j < k; ++j) acc = acc * (alpha - T(BigRational(static_cast<long>(j))));
    return acc * make_rational(BigInt(1), factorial(k));
}

} // namespace takeuchi
