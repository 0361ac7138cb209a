#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "takeuchi/ansatz.hpp"
#include "takeuchi/errors.hpp"

using namespace takeuchi;
using Q = BigRational;
using P = Polynomial<Q>;

namespace {

Q q(long a, long b = 1) { return make_rational(BigInt(a), BigInt(b)); }

P poly(std::initializer_list<long> low_first, Q scale = 1)
{
    std::vector<Q> c;
    for (long x : low_first) c.push_back(Q(x) * scale);
    return P(c);
}

const AnsatzTable<Q>& takeuchi_table()
{
    static const AnsatzTable<Q> t = build_ansatz_table(takeuchi_spec<Q>(), 60);
    return t;
}

} // namespace

TEST_CASE("build_f: bell spec gives m^n")
{
    auto f = build_f(bell_spec<Q>(), 20);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(f[n] == P::monomial(Q(1), n));
}

TEST_CASE("build_f: takeuchi degrees and f_0")
{
    auto& t = takeuchi_table();
    CHECK(t.f[0].is_zero());
    for (std::size_t n = 0; n <= t.f_depth(); ++n) CHECK(t.f[n].degree() <= static_cast<long>(n));
    CHECK(t.f_depth() == 122);
}

TEST_CASE("f resums to T_n")
{
    auto f = build_f(takeuchi_spec<Q>(), 30);
    auto t = takeuchi_numbers(30);
    for (std::size_t n = 1; n <= 30; ++n)
        CHECK(agreeing_digits(resum_f(f[n], 200, 256), BigFloat(t[n], 256)) >= 40);
}

TEST_CASE("d and r tables")
{
    AnsatzTable<Q> bell = build_ansatz_table(bell_spec<Q>(), 10);
    for (std::size_t n = 0; n <= 22; ++n) {
        CHECK(bell.d(n, 0) == 1);
        for (std::size_t k = 1; k <= n; ++k) CHECK(bell.d(n, k) == 0);
    }
    // Building to K=60 already checked two surplus points per k; r_0 vanishes.
    auto& t = takeuchi_table();
    CHECK(t.r_depth() == 60);
    for (std::size_t k = 0; k <= 60; ++k) CHECK(t.r[k][0] == 0);
}

TEST_CASE("interpolate_r rejects a non-polynomial d column")
{
    AnsatzTable<Q> t;
    t.f = build_f(takeuchi_spec<Q>(), 22);
    interpolate_r(t, 10);
    auto coeffs = t.f[13].coefficients();
    coeffs[13 - 6] += 1; // d_{13,6}
    t.f[13] = P(coeffs);
    CHECK_THROWS_AS(interpolate_r(t, 10), StructureError);
    CHECK_THROWS_AS(interpolate_r(t, 11), DepthError);
}

TEST_CASE("rl_series")
{
    auto& t = takeuchi_table();
    auto r1 = rl_series(t, 1, 30);
    auto expected = ExpPolyCombination<Q>{1, 1, {{0, P(1)}}}.expand(30);
    CHECK(r1 == expected);
    CHECK(rl_series(t, 0, 30) == TruncatedPowerSeries<Q>(30));
    CHECK_THROWS_AS(rl_series(t, 5, 56), DepthError);
    AnsatzTable<Q> bell = build_ansatz_table(bell_spec<Q>(), 10);
    CHECK(rl_series(bell, 0, 10) == TruncatedPowerSeries<Q>::constant(1, 10));
}

TEST_CASE("fit_exp_poly reproduces the closed forms of r_1..r_4")
{
    auto& t = takeuchi_table();
    auto fit = [&](std::size_t l) {
        auto shape = takeuchi_shape<Q>(l);
        return fit_exp_poly(rl_series(t, l, shape.unknowns() + kDefaultSlack - 1), shape);
    };
    auto f1 = fit(1);
    CHECK(f1.terms.size() == 1);
    CHECK(f1.term(1) == P(1));

    auto f2 = fit(2);
    CHECK(f2.term(2) == P(2));
    CHECK(f2.term(1) == poly({2, 4, 1, 1}, q(-1, 2)));

    auto f3 = fit(3);
    CHECK(f3.term(3) == P(q(-1, 8)));
    CHECK(f3.term(2) == poly({6, 7, 3, 1}, -1));
    CHECK(f3.term(1) == poly({51, 74, 144, 52, 47, 6, 3}, q(1, 24)));

    auto f4 = fit(4);
    CHECK(f4.term(4) == P(q(-347, 108)));
    CHECK(f4.term(3) == poly({12, 12, 5, 1}, q(1, 16)));
    CHECK(f4.term(2) == poly({195, 406, 411, 226, 89, 18, 3}, q(1, 12)));
    CHECK(f4.term(1) == poly({772, 5484, 4707, 8757, 3384, 3024, 603, 315, 27, 9}, q(-1, 432)));

    // The fitted combination re-expands to the series it came from.
    CHECK(f4.expand(60) == rl_series(t, 4, 56).truncated(56));
}

TEST_CASE("fit_exp_poly errors")
{
    auto& t = takeuchi_table();
    auto shape = takeuchi_shape<Q>(3);
    auto s = rl_series(t, 3, shape.unknowns() + kDefaultSlack - 1);
    CHECK_THROWS_AS(fit_exp_poly(s.truncated(shape.unknowns() + 5), shape), DepthError);
    auto bad = s;
    bad[shape.unknowns() + 3] += 1;
    CHECK_THROWS_AS(fit_exp_poly(bad, shape), StructureError);
    // Too few exponentials for r_3.
    CHECK_THROWS_AS(fit_exp_poly(s, takeuchi_shape<Q>(2)), StructureError);
}

TEST_CASE("lambda table and mu integrality")
{
    auto lt = takeuchi_lambda_table(5);
    std::vector<Q> expect{0, 1, 2, q(-1, 8), q(-347, 108), q(28201, 3456)};
    CHECK(lt.lambda == expect);
    auto mu = mu_values(lt.lambda);
    CHECK(mu[3] == -1);
    for (const auto& m : mu) CHECK(is_integer(m));
    auto sums = h_partial_sums(lt.lambda, 128);
    CHECK(sums.size() == 6);
    CHECK(agreeing_digits(sums[5], BigFloat(Q(3) - q(1, 8) - q(347, 108) + q(28201, 3456), 128)) >= 30);
}

TEST_CASE("plans")
{
    auto p = takeuchi_plan(8);
    CHECK(p.series_terms[8] == 102);
    CHECK(p.r_depth == 109);
    CHECK(p.f_depth == 220);
    auto fp = family_plan(7);
    CHECK(fp.series_terms[7] == 102);
    CHECK(fp.series_terms[0] == 11);
}

TEST_CASE("family at lambda = 0 degenerates to Bell")
{
    auto lt = family_lambda_table(3, Q(0));
    CHECK(lt.lambda == std::vector<Q>{1, 0, 0, 0});
}

TEST_CASE("family h coefficients at rational lambda")
{
    // x^1..x^3 coefficients of h_λ at λ = 1 and λ = 2.
    for (long lam : {1L, 2L, -3L}) {
        auto h = family_h_coefficients(family_lambda_table(3, Q(lam)).lambda, Q(lam));
        Q l(lam);
        CHECK(h[1] == (l - 1) / 2);
        CHECK(h[2] == -(2 * l * l + 18 * l - 5) / 24);
        CHECK(h[3] == -(33 * l * l * l + 90 * l * l - 329 * l + 54) / 216);
    }
    CHECK_THROWS_AS(family_h_coefficients(std::vector<Q>{1, 2}, Q(0)), DomainError);
}

TEST_CASE("formal family run specializes to rational runs")
{
    auto formal = family_lambda_table_formal(2);
    for (Q lam : {q(3, 2), Q(-2), q(1, 3)}) {
        auto direct = family_lambda_table(2, lam);
        for (std::size_t l = 0; l <= 2; ++l) CHECK(formal.lambda[l].evaluate(lam) == direct.lambda[l]);
    }
    auto h = family_h_coefficients(formal.lambda);
    CHECK(h[1] == LambdaPoly({q(-1, 2), q(1, 2)}));
    CHECK(h[2] == LambdaPoly({q(5, 24), q(-3, 4), q(-1, 12)}));
}

TEST_CASE("family h series by lambda-point interpolation")
{
    auto h = h_series_family(3);
    CHECK(h.lambda_points.size() == 6);
    CHECK(h.coefficients[1] == LambdaPoly({q(-1, 2), q(1, 2)}));
    CHECK(h.coefficients[3] == LambdaPoly({q(-1, 4), q(329, 216), q(-5, 12), q(-11, 72)}));
    for (bool ok : h.degree_ok) CHECK(ok);
}
