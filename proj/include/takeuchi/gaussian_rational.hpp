#pragma once

#include "takeuchi/rational.hpp"

#include <string>
#include <string_view>

namespace takeuchi {

/// Exact complex number re + im·i over ℚ.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}
    GaussianRational(const BigInt& v) : re_(v) {}
    GaussianRational(BigRational re) : re_(std::move(re)) {}
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    GaussianRational conj() const { return {re_, -im_}; }
    BigRational norm() const { return BigRational(re_ * re_ + im_ * im_); }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        BigRational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    GaussianRational& operator*=(const BigRational& s)
    {
        re_ *= s;
        im_ *= s;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator*(GaussianRational a, const BigRational& s) { return a *= s; }
    friend GaussianRational operator*(const BigRational& s, GaussianRational a) { return a *= s; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    BigRational re_;
    BigRational im_;
};

inline bool is_zero(const GaussianRational& g) { return is_zero(g.re()) && is_zero(g.im()); }
inline bool is_unit(const GaussianRational& g) { return !is_zero(g); }
inline GaussianRational inverse(const GaussianRational& g) { return GaussianRational(1) / g; }

/// "a/b+c/d*i"; purely real values print as a rational, purely imaginary as "c/d*i".
std::string to_string(const GaussianRational& g);

/// Accepts "a/b", "c/d*i", "a/b+c/d*i", "a/b-c/d*i", "i", "-i".
GaussianRational parse_gaussian(std::string_view text);

} // namespace takeuchi
