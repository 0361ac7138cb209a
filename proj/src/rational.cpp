#include "takeuchi/rational.hpp"

#include "takeuchi/errors.hpp"

#include <cctype>

namespace takeuchi {

namespace {

bool valid_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigInt parse_integer(std::string_view text)
{
    if (!valid_integer_text(text))
        throw DomainError("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    return BigInt(std::string(text), 10);
}

BigRational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    auto den = text.substr(slash + 1);
    if (!den.empty() && (den.front() == '-' || den.front() == '+'))
        throw DomainError("sign not allowed in denominator: '" + std::string(text) + "'");
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

std::string to_string(const BigRational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace takeuchi
