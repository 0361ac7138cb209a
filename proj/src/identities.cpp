#include "takeuchi/identities.hpp"

namespace takeuchi {

TruncatedPowerSeries<BigRational> series_sqrt_one_minus_4z(std::size_t order)
{
    TruncatedPowerSeries<BigRational> s(order);
    const BigRational half(1, 2);
    BigRational binom = 1; // binom(1/2, n)
    BigRational power = 1; // (−4)^n
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            binom *= (half - BigRational(static_cast<long>(n - 1))) / BigRational(static_cast<long>(n));
            power *= -4;
        }
        s[n] = binom * power;
    }
    return s;
}

TruncatedPowerSeries<BigRational> series_catalan(std::size_t order)
{
    // (1 − sqrt(1−4z))/(2z): coefficient n comes from coefficient n+1 of the root.
    auto root = series_sqrt_one_minus_4z(order + 1);
    TruncatedPowerSeries<BigRational> c(order);
    for (std::size_t n = 0; n <= order; ++n) c[n] = -root[n + 1] / 2;
    return c;
}

TruncatedPowerSeries<BigRational> to_series(const IntegerTable& table, std::size_t order)
{
    if (table.max_index() < order) throw DepthError("sequence table shorter than the series order");
    TruncatedPowerSeries<BigRational> s(order);
    for (std::size_t n = 0; n <= order; ++n) s[n] = BigRational(table[n]);
    return s;
}

namespace {

template <class T>
ClauseResult compare(std::string name, const TruncatedPowerSeries<T>& lhs, const TruncatedPowerSeries<T>& rhs)
{
    auto diff = first_difference(lhs, rhs);
    return {std::move(name), !diff.has_value(), diff};
}

template <class T>
TruncatedPowerSeries<T> lift(const TruncatedPowerSeries<BigRational>& s)
{
    TruncatedPowerSeries<T> out(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) out[i] = T(s[i]);
    return out;
}

template <class T>
T constant(long v)
{
    return T(BigRational(v));
}

} // namespace

template <class T>
TruncatedPowerSeries<T> solve_y(const T& lambda, std::size_t order)
{
    // Each pass of y ← z(1+y)^{λ+1} fixes at least one more coefficient.
    const T exponent = lambda + constant<T>(1);
    TruncatedPowerSeries<T> y(order);
    const auto one = TruncatedPowerSeries<T>::constant(constant<T>(1), order);
    for (std::size_t pass = 0; pass < order; ++pass) {
        auto next = pow_series(one + y, exponent).shifted_up(1);
        if (next == y) break;
        y = std::move(next);
    }
    return y;
}

template <class T>
VerificationReport verify_identity(const T& lambda, unsigned long n, std::size_t order)
{
    using takeuchi::is_zero;
    const T lp1 = lambda + constant<T>(1);
    TruncatedPowerSeries<T> plain(order), weighted(order), shifted(order);
    for (std::size_t k = 0; k <= order; ++k) {
        const T tk = constant<T>(static_cast<long>(k));
        const T b = binomial_general(T(lp1 * tk), k);
        const T denom = constant<T>(1) + lambda * tk;
        if (is_zero(denom)) throw DomainError("identity undefined: 1 + λk vanishes at k = " + std::to_string(k));
        plain[k] = b;
        weighted[k] = b / denom;
        shifted[k] = binomial_general(T(constant<T>(static_cast<long>(n)) + lp1 * tk), k);
    }
    const auto y = solve_y(lambda, order);
    const auto one = TruncatedPowerSeries<T>::constant(constant<T>(1), order);
    const auto one_plus_y = one + y;
    const auto closed_b = pow_series(one_plus_y, n + 1) / (one - y.scaled(lambda));

    VerificationReport r{"ident", order, {}};
    r.clauses.push_back(compare("weighted sum = 1 + y", weighted, one_plus_y));
    r.clauses.push_back(compare("shifted sum = (1+y)^(n+1)/(1-lambda*y)", shifted, closed_b));
    r.clauses.push_back(compare("shifted sum = plain sum * weighted sum^n", shifted, plain * pow_series(weighted, n)));
    return r;
}

template <class T>
VerificationReport verify_family_functional_equation(const T& lambda, std::size_t order)
{
    const auto table = family_numbers(order, lambda);
    TruncatedPowerSeries<T> a(order);
    for (std::size_t n = 0; n <= order; ++n) a[n] = table[n];
    const auto y = solve_y(lambda, order);
    const auto one = TruncatedPowerSeries<T>::constant(constant<T>(1), order);
    const auto z = TruncatedPowerSeries<T>::variable(order);
    const auto inner = z * (one + y);
    const auto rhs = one + (z * (one + y) / (one - y.scaled(lambda))) * series_compose(a, inner);

    VerificationReport r{"family", order, {}};
    r.clauses.push_back(compare("A(z) = 1 + z(1+y)/(1-lambda*y) A(z(1+y))", a, rhs));
    return r;
}

VerificationReport verify_takeuchi_functional_equation(std::size_t order)
{
    return verify_takeuchi_functional_equation(takeuchi_numbers(order + 1), order);
}

VerificationReport verify_takeuchi_functional_equation(const IntegerTable& takeuchi, std::size_t order)
{
    using S = TruncatedPowerSeries<BigRational>;
    const S t = to_series(takeuchi, order);
    const S one = S::constant(1, order);
    const S z = S::variable(order);
    const S c = series_catalan(order);
    const S root = series_sqrt_one_minus_4z(order);

    VerificationReport r{"takfunc", order, {}};
    const S catalan_form = (c - one) / (one - z) + (z * (S::constant(2, order) - c) / root) * series_compose(t, z * c);
    r.clauses.push_back(compare("T(z) = (C-1)/(1-z) + z(2-C)/sqrt(1-4z) T(zC)", t, catalan_form));

    // (1/z)·T(z − z²) needs the composition one order higher before dividing by z.
    const S t_up = to_series(takeuchi, order + 1);
    const S z_up = S::variable(order + 1);
    const S g = z_up - z_up * z_up;
    const S transformed = series_compose(t_up, g).divided_by_z() -
                          reciprocal((one - z) * (one - z + z * z));
    r.clauses.push_back(compare("T(z) = T(z-z^2)/z - 1/((1-z)(1-z+z^2))", t, transformed));
    return r;
}

VerificationReport verify_bell_egf(std::size_t order)
{
    using S = TruncatedPowerSeries<BigRational>;
    const auto bell = bell_numbers(order);
    S lhs(order);
    for (std::size_t n = 0; n <= order; ++n) lhs[n] = BigRational(bell[n]) / BigRational(factorial(n));
    S ez_minus_one(order);
    for (std::size_t n = 1; n <= order; ++n) ez_minus_one[n] = make_rational(1, factorial(n));
    VerificationReport r{"bell-egf", order, {}};
    r.clauses.push_back(compare("sum B_n z^n/n! = exp(e^z - 1)", lhs, exp_series(ez_minus_one)));
    return r;
}

VerificationReport verify_special_case_identity(unsigned long n, std::size_t order)
{
    using S = TruncatedPowerSeries<BigRational>;
    S lhs(order);
    for (std::size_t k = 0; k <= order; ++k) lhs[k] = BigRational(binomial(n + 2 * k, k));
    const S rhs = pow_series(series_catalan(order), n) / series_sqrt_one_minus_4z(order);
    VerificationReport r{"special", order, {}};
    r.clauses.push_back(compare("sum binom(n+2k,k) z^k = C(z)^n/sqrt(1-4z)", lhs, rhs));
    return r;
}

template TruncatedPowerSeries<BigRational> solve_y(const BigRational&, std::size_t);
template TruncatedPowerSeries<GaussianRational> solve_y(const GaussianRational&, std::size_t);
template VerificationReport verify_identity(const BigRational&, unsigned long, std::size_t);
template VerificationReport verify_identity(const GaussianRational&, unsigned long, std::size_t);
template VerificationReport verify_family_functional_equation(const BigRational&, std::size_t);
template VerificationReport verify_family_functional_equation(const GaussianRational&, std::size_t);

} // namespace takeuchi
