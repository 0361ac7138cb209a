#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "takeuchi/asymptotics.hpp"
#include "takeuchi/errors.hpp"
#include "takeuchi/extrapolation.hpp"

using namespace takeuchi;

namespace {

constexpr mpfr_prec_t kP = 256;

BigFloat bf(long v) { return BigFloat(v, kP); }

} // namespace

TEST_CASE("accelerate: geometric toy is summed by wynn")
{
    std::vector<BigFloat> a;
    for (long n = 0; n < 8; ++n) a.push_back(bf(1) + pow(bf(2), -n));
    auto t = accelerate(a, AccelMethod::Wynn);
    REQUIRE(t.size() >= 2);
    for (const auto& x : t[1]) CHECK(agreeing_digits(x, bf(1)) >= 70);
    auto ai = accelerate(a, AccelMethod::Aitken);
    CHECK(agreeing_digits(ai[1].back(), bf(1)) >= 70);
}

TEST_CASE("accelerate: sum of 1/k^2 via richardson in 1/n")
{
    std::vector<BigFloat> s, x;
    BigFloat acc = BigFloat::zero(kP);
    for (long n = 1; n <= 40; ++n) {
        acc += bf(1) / bf(n * n);
        s.push_back(acc);
        x.push_back(bf(1) / bf(n));
    }
    // Only the last dozen points are used; early ones are far from asymptotic.
    std::vector<BigFloat> ts(s.end() - 12, s.end()), tx(x.end() - 12, x.end());
    auto t = accelerate(ts, AccelMethod::Richardson, &tx);
    BigFloat target = pi(kP) * pi(kP) / bf(6);
    CHECK(agreeing_digits(best_entry(t), target) >= 10);
}

TEST_CASE("accelerate: constant sequence and errors")
{
    std::vector<BigFloat> c(6, bf(3));
    for (auto m : {AccelMethod::Wynn, AccelMethod::Aitken}) {
        auto t = accelerate(c, m);
        for (const auto& col : t)
            for (const auto& v : col) CHECK(v == bf(3));
    }
    CHECK_THROWS_AS(accelerate({bf(1), bf(2)}, AccelMethod::Wynn), DomainError);
    std::vector<BigFloat> inc{bf(1), bf(2), bf(3)};
    CHECK_THROWS_AS(accelerate(c, AccelMethod::Richardson), DomainError);
    CHECK_THROWS_AS(accelerate(inc, AccelMethod::Richardson, &inc), DomainError);
    CHECK(parse_accel_method("richardson-in-x") == AccelMethod::Richardson);
    CHECK_THROWS_AS(parse_accel_method("levin"), DomainError);
}

TEST_CASE("scale_basis_fit recovers a synthetic constant exactly")
{
    std::vector<ScaleTerm> basis = expand_groups({{2, 0, 3}, {3, 0, 1}});
    CHECK(basis.size() == 4);
    std::vector<BigFloat> v, w;
    for (long n = 300; n < 305; ++n) {
        auto wv = WValue::of(n, kP);
        BigFloat em = exp(-wv.w);
        BigFloat one = bf(1);
        v.push_back(bf(7) + bf(3) * em * em - em * em / (one + wv.w) + bf(5) * em * em * em);
        w.push_back(wv.w);
    }
    CHECK(agreeing_digits(scale_basis_fit(v, w, basis), bf(7)) >= 60);
    CHECK_THROWS_AS(scale_basis_fit(std::vector<BigFloat>(v.begin(), v.end() - 1), w, basis), DomainError);
}

TEST_CASE("estimate_CT at n_max = 300 and 600")
{
    const BigFloat published = BigFloat::parse("2.2394331040052607317547850", 1024);
    auto t = takeuchi_numbers(601);
    auto b = bell_numbers(600);
    auto r300 = estimate_CT(t, b, 300, 1024);
    auto r600 = estimate_CT(t, b, 600, 1024);
    int d300 = agreeing_digits(r300.estimate, published);
    int d600 = agreeing_digits(r600.estimate, published);
    CHECK(d300 >= 8);
    CHECK(d600 > d300);
    // Reported digits are backed by the data.
    CHECK(r600.stable_digits <= d600 + 1);
    CHECK(r600.stable_digits >= 8);
    CHECK(r600.n_hi == 600);
    CHECK(r600.trace.size() >= 6);
    // Raw u_n is within 10 e^{-2w} of the constant.
    auto v = WValue::of(600, 128);
    CHECK(abs(r600.trace.front().value - published).to_double() <= 10 * std::exp(-2 * v.w.to_double()));
    CHECK_THROWS_AS(estimate_CT(t, b, 150, 1024), DomainError);
    CHECK_THROWS_AS(estimate_CT(t, b, 700, 1024), DomainError);
}

TEST_CASE("estimate_CT flags precision starvation")
{
    CHECK_THROWS_AS(estimate_CT(600, 64), PrecisionError);
}

TEST_CASE("family log ratio")
{
    auto b = bell_numbers(50);
    auto a0 = family_numbers(50, GaussianRational(0));
    for (const auto& x : family_log_ratio(a0, b, GaussianRational(0), 128)) {
        CHECK(x.re.is_zero());
        CHECK(x.im.is_zero());
    }
    GaussianRational lam(0, 1);
    auto a = family_numbers(300, lam);
    auto logs = family_log_ratio(a, bell_numbers(300), lam, 256);
    // Phase grows like Im(λ)(w^2/2 + w) without 2π jumps.
    for (std::size_t n = 100; n < 300; ++n) CHECK(abs(logs[n + 1].im - logs[n].im).to_double() < 0.1);
}

TEST_CASE("estimate_d_lambda")
{
    CHECK_THROWS_AS(estimate_d_lambda(GaussianRational(0), 300, 512), DomainError);
    auto r = estimate_d_lambda(GaussianRational(2), 400, 768);
    auto again = estimate_d_lambda(GaussianRational(2), 400, 1536);
    CHECK(agreeing_digits(r.estimate, again.estimate) >= r.stable_digits);
    CHECK(r.stable_digits >= 8);
    CHECK_FALSE(r.estimate_imag.has_value());
    auto c = estimate_d_lambda(GaussianRational(BigRational(1, 2), BigRational(1, 2)), 300, 768);
    REQUIRE(c.estimate_imag.has_value());
    CHECK(c.stable_digits >= 6);
}
