#include "takeuchi/gaussian_rational.hpp"

#include "takeuchi/errors.hpp"

namespace takeuchi {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    BigRational n = o.norm();
    if (is_zero(n)) throw DomainError("division by zero Gaussian rational");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string to_string(const GaussianRational& g)
{
    if (is_zero(g.im())) return to_string(g.re());
    std::string im = to_string(g.im()) + "*i";
    if (is_zero(g.re())) return im;
    if (sgn(g.im()) > 0) return to_string(g.re()) + "+" + im;
    return to_string(g.re()) + im;
}

namespace {

BigRational parse_imaginary_coefficient(std::string_view s)
{
    // s is the text in front of "*i" or "i", possibly just a sign.
    if (s.empty() || s == "+") return BigRational(1);
    if (s == "-") return BigRational(-1);
    if (s.back() == '*') s.remove_suffix(1);
    return parse_rational(s);
}

} // namespace

GaussianRational parse_gaussian(std::string_view text)
{
    if (text.empty()) throw DomainError("empty Gaussian rational");
    if (text.back() != 'i') return GaussianRational(parse_rational(text));
    text.remove_suffix(1);
    // The real/imaginary split is the last '+' or '-' that is not the leading sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if (text[i] == '+' || text[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) return {BigRational(0), parse_imaginary_coefficient(text)};
    return {parse_rational(text.substr(0, split)), parse_imaginary_coefficient(text.substr(split))};
}

} // namespace takeuchi
