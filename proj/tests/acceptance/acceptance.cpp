// Acceptance checks. Each criterion prints one line:
//   criterion N: PASS|FAIL <detail>
// Usage: acceptance [N ...]   (no arguments runs all of them)

#include "takeuchi/ansatz.hpp"
#include "takeuchi/asymptotics.hpp"
#include "takeuchi/extrapolation.hpp"
#include "takeuchi/identities.hpp"
#include "takeuchi/sequences.hpp"
#include "takeuchi/tak_oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace takeuchi;
using Q = BigRational;
using P = Polynomial<Q>;

namespace {

const char* const kPublishedCT = "2.2394331040052607317547850";
constexpr mpfr_prec_t kPrec = 3072;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

Q q(long a, long b = 1) { return make_rational(BigInt(a), BigInt(b)); }

P poly(std::initializer_list<long> low_first, Q scale = 1)
{
    std::vector<Q> c;
    for (long x : low_first) c.push_back(Q(x) * scale);
    return P(c);
}

std::string poly_text(const P& p)
{
    std::string s = "[";
    for (long i = 0; i <= p.degree(); ++i) s += (i ? ", " : "") + to_string(p[i]);
    return s + "]";
}

const IntegerTable& takeuchi_to(std::size_t n)
{
    static std::map<std::size_t, IntegerTable> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, takeuchi_numbers(n)).first;
    return it->second;
}

const IntegerTable& bell_to(std::size_t n)
{
    static std::map<std::size_t, IntegerTable> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, bell_numbers(n)).first;
    return it->second;
}

BigFloat scale2w(long n, mpfr_prec_t p) { return exp(-2 * WValue::of(n, p).w); }

void criterion1(Outcome& o)
{
    std::vector<long> expect{0, 1, 4, 14, 53, 223, 1034, 5221, 28437, 165859};
    auto t = takeuchi_numbers(9);
    bool list_ok = t.values.size() == expect.size();
    for (std::size_t n = 0; list_ok && n < expect.size(); ++n) list_ok = t.values[n] == BigInt(expect[n]);
    o.require(list_ok, "takeuchi_numbers(9)");
    auto oracle = oracle_table(8);
    bool oracle_ok = !oracle.cutoff && oracle.table.values.size() == 9;
    for (std::size_t n = 0; oracle_ok && n <= 8; ++n) oracle_ok = oracle.table.values[n] == BigInt(expect[n]);
    o.require(oracle_ok, "tak oracle n <= 8");
    o.detail << "T_0..T_9 =";
    for (const auto& v : t.values) o.detail << ' ' << v.get_str();
    o.detail << "; oracle agrees through n=8";
}

void criterion2(Outcome& o)
{
    constexpr std::size_t K = 30;
    std::vector<VerificationReport> reports;
    reports.push_back(verify_takeuchi_functional_equation(K));
    for (long lam : {0L, 1L, 2L, 3L}) reports.push_back(verify_family_functional_equation(Q(lam), K));
    for (long lam : {0L, 1L, 2L, 3L})
        for (unsigned long n : {0UL, 1UL, 2UL, 5UL}) reports.push_back(verify_identity(Q(lam), n, K));
    for (unsigned long n : {0UL, 1UL, 2UL, 5UL}) reports.push_back(verify_special_case_identity(n, K));
    reports.push_back(verify_bell_egf(K));
    std::size_t clauses = 0;
    for (const auto& r : reports) {
        clauses += r.clauses.size();
        for (const auto& c : r.clauses)
            o.require(c.pass && r.order == K,
                      r.what + "/" + c.name + " at order " +
                          (c.first_failing_order ? std::to_string(*c.first_failing_order) : "?"));
    }
    o.detail << reports.size() << " reports, " << clauses << " clauses exact through order " << K;
}

void criterion3(Outcome& o)
{
    const auto& t = takeuchi_to(500);
    BigFloat min_lower(1e9, 256), min_upper(1e9, 256);
    for (std::size_t n = 50; n <= 500; ++n) {
        auto c = knuth_bounds_check(t, n, 256);
        o.require(c.lower_ok && c.upper_ok, "bounds at n=" + std::to_string(n));
        if (c.lower_margin < min_lower) min_lower = c.lower_margin;
        if (c.upper_margin < min_upper) min_upper = c.upper_margin;
    }
    o.detail << "n=50..500 strict; smallest log margins lower " << min_lower.to_string(6) << ", upper "
             << min_upper.to_string(6);
}

void criterion4(Outcome& o)
{
    const auto& t = takeuchi_to(1001);
    const auto& b = bell_to(1000);
    BigFloat worst(0.0, 256);
    std::size_t worst_n = 0;
    for (std::size_t n = 100; n <= 1000; ++n) {
        auto g = growth_gap_exact(t, b, n);
        o.require(g >= 1, "gap >= 1 at n=" + std::to_string(n));
        auto excess = (BigFloat(g, 256) - BigFloat(1L, 256)) * exp(WValue::of(static_cast<long>(n), 256).w);
        o.require(excess <= BigFloat(10L, 256), "gap <= 1 + 10 e^-w at n=" + std::to_string(n));
        if (excess > worst) {
            worst = excess;
            worst_n = n;
        }
    }
    o.detail << "n=100..1000: 1 <= gap; max (gap-1)e^w = " << worst.to_string(6) << " at n=" << worst_n
             << " (limit 10)";
}

const ExtrapolationResult& ct_estimate()
{
    static const ExtrapolationResult r = estimate_CT(takeuchi_to(1001), bell_to(1000), 1000, kPrec);
    return r;
}

void criterion5(Outcome& o)
{
    const auto& r = ct_estimate();
    int agree = agreeing_digits(r.estimate, BigFloat::parse(kPublishedCT, kPrec));
    o.require(agree >= 12, "agreement with published value");
    o.require(r.stable_digits >= 12, "stable_digits");
    o.detail << "C_T = " << r.estimate.to_string(22) << ", " << agree << " digits agree with " << kPublishedCT
             << ", stable_digits " << r.stable_digits;
}

void criterion6(Outcome& o)
{
    const auto& t = takeuchi_to(1000);
    auto ct = BigFloat::parse(kPublishedCT, kPrec);
    for (long n : {200L, 500L, 1000L}) {
        auto resid = abs(log_of(t[n], kPrec) - conjecture1_log_T(n, ct, kPrec));
        auto scaled = resid / scale2w(n, kPrec);
        o.require(scaled <= BigFloat(20L, kPrec), "residual at n=" + std::to_string(n));
        o.detail << "n=" << n << ": |resid| e^{2w} = " << scaled.to_string(5) << "; ";
    }
    o.detail << "limit 20";
}

void criterion7(Outcome& o)
{
    const auto& b = bell_to(1000);
    std::vector<BigFloat> err;
    for (long n : {100L, 300L, 1000L}) {
        err.push_back(abs(log_of(b[n], kPrec) - bell_log_asymptotic(n, 2, kPrec)));
        o.detail << "n=" << n << ": " << err.back().to_string(5) << "; ";
    }
    o.require(err[1] < err[0] && err[2] < err[1], "decreasing");
    auto limit = BigFloat(100L, kPrec) * exp(-3 * WValue::of(1000, kPrec).w);
    o.require(err[2] < limit, "n=1000 below 100 e^{-3w}");
    o.detail << "limit at 1000 = " << limit.to_string(5);
}

void criterion8(Outcome& o)
{
    const auto plan = takeuchi_plan(8);
    auto table = build_ansatz_table(takeuchi_spec<Q>(), plan.r_depth);
    auto fit = [&](std::size_t l) {
        auto shape = takeuchi_shape<Q>(l);
        return fit_exp_poly(rl_series(table, l, shape.unknowns() + kDefaultSlack - 1), shape);
    };
    auto f1 = fit(1), f2 = fit(2), f3 = fit(3), f4 = fit(4);
    o.require(f1.terms.size() == 1 && f1.term(1) == P(1), "r_1");
    o.require(f2.terms.size() == 2 && f2.term(2) == P(2) && f2.term(1) == poly({2, 4, 1, 1}, q(-1, 2)), "r_2");
    o.require(f3.terms.size() == 3 && f3.term(3) == P(q(-1, 8)) && f3.term(2) == poly({6, 7, 3, 1}, -1) &&
                  f3.term(1) == poly({51, 74, 144, 52, 47, 6, 3}, q(1, 24)),
              "r_3");
    o.require(f4.terms.size() == 4 && f4.term(4) == P(q(-347, 108)) &&
                  f4.term(3) == poly({12, 12, 5, 1}, q(1, 16)) &&
                  f4.term(2) == poly({195, 406, 411, 226, 89, 18, 3}, q(1, 12)) &&
                  f4.term(1) == poly({772, 5484, 4707, 8757, 3384, 3024, 603, 315, 27, 9}, q(-1, 432)),
              "r_4");

    auto lt = lambda_table(table, 8, [](std::size_t l) { return takeuchi_shape<Q>(l); });
    std::vector<Q> printed{0,
                           1,
                           2,
                           q(-1, 8),
                           q(-347, 108),
                           q(28201, 3456),
                           make_rational(BigInt(-3172987), BigInt(216000)),
                           make_rational(BigInt(822813607), BigInt(93312000)),
                           make_rational(BigInt("2183235065857"), BigInt("16003008000"))};
    for (std::size_t l = 0; l <= 8; ++l)
        o.require(lt.lambda[l] == printed[l], "lambda_" + std::to_string(l) + " = " + to_string(lt.lambda[l]));
    auto mu = mu_values(lt.lambda);
    std::string mus;
    for (std::size_t l = 1; l < mu.size(); ++l) {
        o.require(is_integer(mu[l]), "mu_" + std::to_string(l) + " integer");
        mus += (l > 1 ? " " : "") + to_string(mu[l]);
    }
    o.detail << "r_1..r_4 exact; lambda_0..lambda_8 match (lambda_8 = " << to_string(lt.lambda[8])
             << "); mu_1..mu_8 = " << mus;
}

void criterion9(Outcome& o)
{
    auto h = h_series_family(7);
    std::vector<P> printed{
        P(),
        P({q(-1, 2), q(1, 2)}),
        P({q(5, 24), q(-18, 24), q(-2, 24)}),
        P({q(-54, 216), q(329, 216), q(-90, 216), q(-33, 216)}),
        P({q(502, 960), q(-4240, 960), Q(0), q(520, 960), q(-52, 960)}),
    };
    for (std::size_t k = 1; k <= 4; ++k) {
        bool ok = h.coefficients[k] == printed[k];
        o.require(ok, "x^" + std::to_string(k) + " computed " + poly_text(h.coefficients[k]) + " printed " +
                          poly_text(printed[k]));
    }
    for (std::size_t k = 1; k <= 7; ++k)
        o.require(h.degree_ok[k], "lambda-degree of x^" + std::to_string(k) + " exceeds " + std::to_string(k));
    o.detail << "degrees of x^1..x^7 in lambda:";
    for (std::size_t k = 1; k <= 7; ++k) o.detail << ' ' << h.coefficients[k].degree();
    o.detail << "; x^4 computed " << poly_text(h.coefficients[4]);

    // Off the interpolation grid: a direct run at λ = 7/3 must agree with the
    // interpolated polynomials.
    const Q off = q(7, 3);
    auto direct = family_h_coefficients(family_lambda_table(4, off).lambda, off);
    for (std::size_t k = 1; k <= 4; ++k)
        o.require(direct[k] == h.coefficients[k].evaluate(off), "direct run at 7/3 disagrees at x^" + std::to_string(k));
    o.detail << "; direct run at lambda=7/3 matches the computed x^1..x^4";
}

void criterion10(Outcome& o)
{
    constexpr std::size_t n_max = 800;
    const auto& b = bell_to(n_max);
    for (const Q& lam_q : {Q(1), Q(2), q(1, 2)}) {
        GaussianRational lam(lam_q);
        auto a = family_numbers(n_max, lam);
        auto d = estimate_d_lambda(lam, a, b, n_max, kPrec);
        auto logs = family_log_ratio(a, b, lam, kPrec);
        BigFloat d_im = d.estimate_imag ? *d.estimate_imag : BigFloat::zero(kPrec);
        std::vector<BigFloat> resid, scaled;
        o.detail << "lambda=" << to_string(lam_q) << " d=" << d.estimate.to_string(16) << " (stable "
                 << d.stable_digits << "), |resid|e^{2w} at 200/400/800:";
        for (long n : {200L, 400L, 800L}) {
            resid.push_back(family_residual(lam, logs, n, d.estimate, d_im));
            scaled.push_back(resid.back() / scale2w(n, kPrec));
            o.detail << ' ' << scaled.back().to_string(4);
            o.require(scaled.back() <= BigFloat(20L, kPrec),
                      "lambda=" + to_string(lam_q) + " n=" + std::to_string(n) + " exceeds 20 e^{-2w}");
        }
        o.require(resid[1] < resid[0] && resid[2] < resid[1], "lambda=" + to_string(lam_q) + " not shrinking");
        o.detail << "; ";
    }
    o.detail << "limit 20";
}

void criterion11(Outcome& o)
{
    auto lt = takeuchi_lambda_table(8);
    auto sums = h_partial_sums(lt.lambda, kPrec);
    Q exact5 = Q(0) + 1 + 2 - q(1, 8) - q(347, 108) + q(28201, 3456);
    Q acc = 0;
    for (std::size_t l = 0; l <= 5; ++l) acc += lt.lambda[l];
    o.require(acc == exact5, "exact sum through l=5");
    o.require(agreeing_digits(sums[5], BigFloat(exact5, kPrec)) >= 300, "float partial sum through l=5");
    o.require(sums.size() == 9, "sums through l=8");
    const auto& ct = ct_estimate();
    o.detail << "C_T ~ " << ct.estimate.to_string(16) << "; partial sums l=0..8:";
    for (const auto& s : sums) o.detail << ' ' << s.to_string(8);
    o.detail << "; sum_{l<=5} = " << to_string(exact5) << " (no convergence asserted)";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance checks"};
    std::vector<int> which;
    app.add_option("criteria", which, "Criterion numbers (default: all)")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);
    if (which.empty())
        for (int i = 1; i <= 11; ++i) which.push_back(i);

    const std::map<int, std::function<void(Outcome&)>> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},   {5, criterion5},  {6, criterion6},
        {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, criterion11},
    };
    bool all = true;
    for (int i : which) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria.at(i)(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL") << ' ' << o.detail.str() << " ("
                  << std::fixed;
        std::cout.precision(1);
        std::cout << secs << " s)";
        for (const auto& f : o.failures) std::cout << "\n    failed: " << f;
        std::cout << std::endl;
        std::cout.unsetf(std::ios::fixed);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
