#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "takeuchi/sequences.hpp"
#include "takeuchi/tak_oracle.hpp"

#include <sstream>

using namespace takeuchi;

namespace {

const std::vector<long> kTakeuchiPrefix = {0, 1, 4, 14, 53, 223, 1034, 5221, 28437, 165859};

std::vector<BigInt> ints(const std::vector<long>& v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("takeuchi_numbers")
{
    CHECK(takeuchi_numbers(9).values == ints(kTakeuchiPrefix));
    CHECK(takeuchi_numbers(0).values == ints({0}));
    CHECK(takeuchi_numbers(1).values == ints({0, 1}));
}

TEST_CASE("bell, catalan and partial sums")
{
    CHECK(bell_numbers(5).values == ints({1, 1, 2, 5, 15, 52}));
    CHECK(bell_numbers(0).values == ints({1}));
    CHECK(catalan_numbers(5).values == ints({1, 1, 2, 5, 14, 42}));
    auto b = catalan_partial_sums(3);
    CHECK(b[1] == 1);
    CHECK(b[3] == 8);
    auto c = catalan_numbers(40);
    for (unsigned long n = 0; n <= 40; ++n) CHECK(c[n] * (n + 1) == binomial(2 * n, n));
}

TEST_CASE("takeuchi recurrence and shifted general recurrence agree to n = 300")
{
    auto direct = takeuchi_numbers(300);
    auto general = run_general_recurrence(takeuchi_spec<BigInt>(), 300);
    CHECK(direct.values == general.values);
}

TEST_CASE("general recurrence: bell and zero specs")
{
    CHECK(run_general_recurrence(bell_spec<BigInt>(), 5).values == ints({1, 1, 2, 5, 15, 52}));
    auto z = run_general_recurrence(zero_spec<BigInt>(), 6);
    for (const auto& v : z.values) CHECK(v == 0);
    CHECK(run_general_recurrence(takeuchi_spec<BigRational>(), 9).values[9] == 165859);
}

TEST_CASE("takeuchi is increasing and dominates bell up to 300")
{
    auto t = takeuchi_numbers(300);
    auto b = bell_numbers(300);
    CHECK(b[1] == t[1]);
    for (std::size_t n = 2; n <= 300; ++n) {
        CHECK(t[n] > t[n - 1]);
        CHECK(b[n] < t[n]);
    }
}

TEST_CASE("family numbers")
{
    auto bell = bell_numbers(5);
    auto zero = family_numbers(5, BigRational(0));
    for (std::size_t n = 0; n <= 5; ++n) CHECK(zero[n] == BigRational(bell[n]));
    auto one = family_numbers(3, BigRational(1));
    CHECK(one.values == std::vector<BigRational>{1, 1, 3, 12});
    auto gi = family_numbers(2, GaussianRational(0, 1));
    CHECK(gi[2] == GaussianRational(2, 1));
}

TEST_CASE("family numbers at lambda = 1 are positive integers to 300")
{
    auto one = family_numbers(300, BigRational(1));
    for (const auto& v : one.values) {
        CHECK(is_integer(v));
        CHECK(sgn(v) > 0);
    }
}

TEST_CASE("family numbers: rational and real-gaussian lambda agree; general recurrence agrees")
{
    for (auto lam : {BigRational(1, 2), BigRational(-3, 7), BigRational(5, 3), BigRational(-2)}) {
        auto q = family_numbers(40, lam);
        auto g = family_numbers(40, GaussianRational(lam));
        auto r = run_general_recurrence(family_spec<BigRational>(lam), 40);
        for (std::size_t n = 0; n <= 40; ++n) {
            CHECK(g[n] == GaussianRational(q[n]));
            CHECK(r[n] == q[n]);
        }
    }
    // complex lambda against the shifted general recurrence
    GaussianRational lam(BigRational(1, 3), BigRational(2));
    auto g = family_numbers(25, lam);
    auto r = run_general_recurrence(family_spec<GaussianRational>(lam), 25);
    CHECK(g.values == r.values);
}

TEST_CASE("sequence file round trip and validation")
{
    auto t = takeuchi_numbers(12);
    std::stringstream ss;
    write_sequence(ss, t);
    CHECK(ss.str().rfind("# takeuchi 12 integer\n0\n1\n4\n", 0) == 0);
    auto back = read_sequence<BigInt>(ss);
    CHECK(back.values == t.values);
    CHECK(back.name == "takeuchi");

    auto g = family_numbers(4, GaussianRational(BigRational(1, 2), BigRational(-1)));
    std::stringstream gs;
    write_sequence(gs, g);
    CHECK(read_sequence<GaussianRational>(gs).values == g.values);

    std::stringstream truncated("# takeuchi 5 integer\n0\n1\n4\n");
    CHECK_THROWS_AS(read_sequence<BigInt>(truncated), DomainError);
    std::stringstream wrong_domain("# family 1 rational\n1\n1\n");
    CHECK_THROWS_AS(read_sequence<BigInt>(wrong_domain), DomainError);
    std::stringstream no_header("0\n1\n");
    CHECK_THROWS_AS(read_sequence<BigInt>(no_header), DomainError);
}

TEST_CASE("tak_value and tak_count on small arguments")
{
    CHECK(tak_value(0, 0, 1) == 0);
    CHECK(tak_count(0, 0, 1) == 0);
    // Hand evaluation: t(1,0,2) -> t(t(0,0,2), t(-1,2,1), t(1,1,0)) = t(0,2,1) = 2.
    CHECK(tak_value(1, 0, 2) == 2);
    CHECK(tak_count(1, 0, 2) == 1);
    CHECK(tak_value(2, 0, 3) == 3);
    for (long n = 0; n <= 4; ++n) CHECK(tak_count(n, 0, n + 1) == BigInt(kTakeuchiPrefix[n]));
    CHECK(tak_count(5, 0, 6) == 223);
}

TEST_CASE("oracle table matches the recurrence")
{
    auto oracle = oracle_table(10);
    CHECK_FALSE(oracle.cutoff.has_value());
    CHECK(oracle.table.values == takeuchi_numbers(10).values);
    CHECK(oracle_table(0).table.values == ints({0}));
}

TEST_CASE("oracle budget exhaustion yields a partial table")
{
    auto partial = oracle_table(12, 50);
    REQUIRE(partial.cutoff.has_value());
    CHECK(partial.table.values.size() == *partial.cutoff);
    for (std::size_t n = 0; n < partial.table.values.size(); ++n) CHECK(partial.table[n] == BigInt(kTakeuchiPrefix[n]));
    CHECK_THROWS_AS(TakOracle(10, false).count(6, 0, 7), ResourceError);
}

namespace {

// Brute-force recursive walk collecting every state reachable from (n, 0, n+1).
void reachable(const TakState& s, std::vector<TakState>& out, int depth = 0)
{
    if (depth > 64) return;
    for (const auto& seen : out)
        if (seen == s) return;
    out.push_back(s);
    if (s.x <= s.y) return;
    TakOracle o;
    TakState a{s.x - 1, s.y, s.z}, b{s.y - 1, s.z, s.x}, c{s.z - 1, s.x, s.y};
    reachable(a, out, depth + 1);
    reachable(b, out, depth + 1);
    reachable(c, out, depth + 1);
    reachable({o.value(a.x, a.y, a.z), o.value(b.x, b.y, b.z), o.value(c.x, c.y, c.z)}, out, depth + 1);
}

} // namespace

TEST_CASE("memoized and plain evaluation agree on every reachable state")
{
    for (std::int64_t n = 0; n <= 5; ++n) {
        std::vector<TakState> states;
        reachable({n, 0, n + 1}, states);
        TakOracle memo;
        for (const auto& s : states) {
            TakOracle plain(TakOracle::kDefaultBudget, false);
            auto a = memo.evaluate(s);
            auto b = plain.evaluate(s);
            CHECK(a.value == b.value);
            CHECK(a.count == b.count);
            CHECK(sgn(a.count) >= 0);
            CHECK((sgn(a.count) == 0) == (s.x <= s.y));
        }
    }
}
