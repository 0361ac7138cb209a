#include "takeuchi/ansatz.hpp"

#include "takeuchi/errors.hpp"
#include "takeuchi/linear_solve.hpp"

#include <atomic>
#include <thread>

namespace takeuchi {

namespace {

template <class T>
T from_long(long v)
{
    return T(BigRational(v));
}

/// e^{γv²/2 + βv} through v^{order}.
template <class T>
TruncatedPowerSeries<T> gauss_exp(const T& gamma, const T& beta, std::size_t order)
{
    TruncatedPowerSeries<T> g(order), b(order);
    T half_gamma = gamma * BigRational(1, 2);
    T gp = from_long<T>(1), bp = from_long<T>(1);
    BigInt fact = 1;
    for (std::size_t i = 0; i <= order; ++i) {
        if (i > 0) {
            fact *= static_cast<unsigned long>(i);
            bp = bp * beta;
        }
        b[i] = bp * make_rational(BigInt(1), fact);
    }
    fact = 1;
    for (std::size_t i = 0; 2 * i <= order; ++i) {
        if (i > 0) {
            fact *= static_cast<unsigned long>(i);
            gp = gp * half_gamma;
        }
        g[2 * i] = gp * make_rational(BigInt(1), fact);
    }
    return g * b;
}

} // namespace

template <class T>
T AnsatzTable<T>::d(std::size_t n, std::size_t k) const
{
    if (n >= f.size()) throw DepthError("f table holds n ≤ " + std::to_string(f_depth()));
    if (k > n) return T{};
    return f[n][n - k];
}

template <class T>
std::vector<Polynomial<T>> build_f(const RecurrenceSpec<T>& spec, std::size_t n_max)
{
    using takeuchi::is_zero;
    std::vector<Polynomial<T>> f;
    std::vector<Polynomial<T>> shifted; // f_n(m−1)
    f.reserve(n_max + 1);
    shifted.reserve(n_max + 1);
    f.push_back(Polynomial<T>(std::vector<T>{spec.initial}));
    shifted.push_back(f.back());
    for (std::size_t n = 1; n <= n_max; ++n) {
        const long ln = static_cast<long>(n);
        std::vector<T> acc(n);
        for (long k = 1; k <= ln; ++k) {
            const auto& prev = shifted[n - static_cast<std::size_t>(k)];
            if (prev.is_zero()) continue;
            T c = spec.coefficient(ln, k);
            if (is_zero(c)) continue;
            const auto& pc = prev.coefficients();
            for (std::size_t i = 0; i < pc.size(); ++i) acc[i] += c * pc[i];
        }
        std::vector<T> coeffs;
        coeffs.reserve(n + 1);
        coeffs.push_back(spec.inhomogeneous(ln));
        for (auto& a : acc) coeffs.push_back(std::move(a));
        f.emplace_back(std::move(coeffs));
        shifted.push_back(poly_shift_argument(f.back()));
    }
    return f;
}

template <class T>
void interpolate_r(AnsatzTable<T>& table, std::size_t k_max)
{
    if (table.f.empty() || table.f_depth() < 2 * k_max + 2)
        throw DepthError("interpolating r to k=" + std::to_string(k_max) + " needs f to n=" +
                         std::to_string(2 * k_max + 2));
    table.r.clear();
    for (std::size_t k = 0; k <= k_max; ++k) {
        std::vector<std::pair<BigRational, T>> pts;
        for (std::size_t n = k; n <= 2 * k + 2; ++n) pts.emplace_back(BigRational(static_cast<long>(n)), table.d(n, k));
        auto p = lagrange_interpolate(pts);
        if (p.degree() > static_cast<long>(k))
            throw StructureError("d_{n," + std::to_string(k) + "} is not a polynomial of degree ≤ " +
                                 std::to_string(k) + " in n (interpolant degree " + std::to_string(p.degree()) + ")");
        std::vector<T> row(k + 1);
        for (std::size_t l = 0; l <= k; ++l) row[l] = p[k - l];
        table.r.push_back(std::move(row));
    }
}

template <class T>
AnsatzTable<T> build_ansatz_table(const RecurrenceSpec<T>& spec, std::size_t k_max)
{
    AnsatzTable<T> t;
    t.spec_name = spec.name;
    t.f = build_f(spec, 2 * k_max + 2);
    interpolate_r(t, k_max);
    return t;
}

template <class T>
TruncatedPowerSeries<T> rl_series(const AnsatzTable<T>& table, std::size_t l, std::size_t order)
{
    const long need = static_cast<long>(l + order);
    if (table.r_depth() < need)
        throw DepthError("r_" + std::to_string(l) + "(v) through v^" + std::to_string(order) +
                         " needs the r table to k=" + std::to_string(need) + ", have " +
                         std::to_string(table.r_depth()));
    TruncatedPowerSeries<T> s(order);
    for (std::size_t k = 0; k <= order; ++k) s[k] = table.r[l + k][l];
    return s;
}

template <class T>
Polynomial<T> ExpPolyCombination<T>::term(long j) const
{
    for (const auto& t : terms)
        if (t.j == j) return t.p;
    return {};
}

template <class T>
TruncatedPowerSeries<T> ExpPolyCombination<T>::expand(std::size_t order) const
{
    TruncatedPowerSeries<T> sum(order);
    for (const auto& t : terms) {
        auto e = gauss_exp<T>(T{}, from_long<T>(t.j), order);
        sum += TruncatedPowerSeries<T>::from_polynomial(t.p, order) * e;
    }
    return sum * gauss_exp<T>(gamma, beta, order);
}

template <class T>
std::size_t FitShape<T>::unknowns() const
{
    std::size_t u = 0;
    for (const auto& [j, deg] : j_degree) u += deg + 1;
    return u;
}

template <class T>
FitShape<T> takeuchi_shape(std::size_t l)
{
    FitShape<T> s{from_long<T>(1), from_long<T>(0), {}};
    for (std::size_t k = 0; k < l; ++k) s.j_degree.emplace_back(static_cast<long>(l - k), 3 * k);
    return s;
}

template <class T>
FitShape<T> family_shape(std::size_t l, const T& lambda)
{
    FitShape<T> s{lambda, lambda, {}};
    for (std::size_t k = 0; k <= l; ++k) s.j_degree.emplace_back(static_cast<long>(l - k), 3 * k);
    return s;
}

template <class T>
ExpPolyCombination<T> fit_exp_poly(const TruncatedPowerSeries<T>& series, const FitShape<T>& shape, std::size_t slack)
{
    using takeuchi::is_zero;
    const std::size_t unknowns = shape.unknowns();
    const std::size_t rows = series.order() + 1;
    if (rows < unknowns + slack)
        throw DepthError("fit needs " + std::to_string(unknowns + slack) + " series terms (" +
                         std::to_string(unknowns) + " unknowns + " + std::to_string(slack) + " surplus), have " +
                         std::to_string(rows));
    auto target = series * gauss_exp<T>(T(-shape.gamma), T(-shape.beta), series.order());

    // Row i is scaled by i! so the basis entries j^{i−a} i!/(i−a)! are integers.
    RationalMatrix a(rows, std::vector<BigRational>(unknowns));
    std::vector<T> b(rows);
    BigInt fact = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        if (i > 0) fact *= static_cast<unsigned long>(i);
        b[i] = target[i] * BigRational(fact);
        std::size_t col = 0;
        for (const auto& [j, deg] : shape.j_degree) {
            for (std::size_t p = 0; p <= deg; ++p, ++col) {
                if (i < p) continue;
                BigInt falling = 1;
                for (std::size_t t = 0; t < p; ++t) falling *= static_cast<unsigned long>(i - t);
                BigInt jp;
                mpz_pow_ui(jp.get_mpz_t(), BigInt(j).get_mpz_t(), static_cast<unsigned long>(i - p));
                a[i][col] = BigRational(falling * jp);
            }
        }
    }
    auto sol = solve_exact(std::move(a), std::move(b));
    if (sol.first_inconsistent_row)
        throw StructureError("exponential-polynomial structure falsified: surplus coefficient of v^" +
                             std::to_string(*sol.first_inconsistent_row) + " does not match");
    ExpPolyCombination<T> out{shape.gamma, shape.beta, {}};
    std::size_t col = 0;
    for (const auto& [j, deg] : shape.j_degree) {
        std::vector<T> c(sol.x.begin() + static_cast<long>(col), sol.x.begin() + static_cast<long>(col + deg + 1));
        col += deg + 1;
        out.terms.push_back({j, Polynomial<T>(std::move(c))});
    }
    return out;
}

AnsatzPlan takeuchi_plan(std::size_t l_max, std::size_t slack)
{
    return plan_ansatz(l_max, slack, [](std::size_t l) { return takeuchi_shape<BigRational>(l).unknowns(); });
}

AnsatzPlan family_plan(std::size_t l_max, std::size_t slack)
{
    return plan_ansatz(l_max, slack,
                       [](std::size_t l) { return family_shape<BigRational>(l, BigRational(1)).unknowns(); });
}

LambdaTable<BigRational> takeuchi_lambda_table(std::size_t l_max, std::size_t slack)
{
    auto plan = takeuchi_plan(l_max, slack);
    auto table = build_ansatz_table(takeuchi_spec<BigRational>(), plan.r_depth);
    return lambda_table(table, l_max, [](std::size_t l) { return takeuchi_shape<BigRational>(l); }, slack);
}

std::vector<BigRational> mu_values(const std::vector<BigRational>& lambdas)
{
    std::vector<BigRational> mu;
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
        if (l == 0) {
            mu.push_back(lambdas[0]);
            continue;
        }
        BigInt f = factorial(l - 1);
        mu.push_back(lambdas[l] * BigRational(f * f * f));
    }
    return mu;
}

std::vector<BigFloat> h_partial_sums(const std::vector<BigRational>& lambdas, mpfr_prec_t precision)
{
    std::vector<BigFloat> out;
    BigRational acc = 0;
    for (const auto& l : lambdas) {
        acc += l;
        out.emplace_back(acc, precision);
    }
    return out;
}

std::vector<BigRational> family_h_coefficients(const std::vector<BigRational>& lambdas, const BigRational& lambda)
{
    if (lambdas.empty() || lambdas[0] != 1) throw DomainError("family λ_0 must be 1");
    if (sgn(lambda) == 0) throw DomainError("h_λ is undefined at λ = 0");
    auto log_h = log_series(TruncatedPowerSeries<BigRational>(lambdas, lambdas.size() - 1));
    std::vector<BigRational> out;
    for (const auto& c : log_h.coefficients()) out.push_back(c / lambda);
    return out;
}

std::vector<LambdaPoly> family_h_coefficients(const std::vector<LambdaPoly>& lambdas)
{
    if (lambdas.empty() || lambdas[0] != LambdaPoly(1)) throw DomainError("family λ_0 must be 1");
    auto log_h = log_series(TruncatedPowerSeries<LambdaPoly>(lambdas, lambdas.size() - 1));
    std::vector<LambdaPoly> out;
    for (const auto& c : log_h.coefficients()) {
        if (sgn(c[0]) != 0) throw StructureError("log H(x) coefficient not divisible by λ");
        out.push_back(c.divide_by_x());
    }
    return out;
}

LambdaTable<BigRational> family_lambda_table(std::size_t l_max, const BigRational& lambda, std::size_t slack)
{
    auto plan = family_plan(l_max, slack);
    auto table = build_ansatz_table(family_spec<BigRational>(lambda), plan.r_depth);
    return lambda_table(table, l_max, [&](std::size_t l) { return family_shape<BigRational>(l, lambda); }, slack);
}

LambdaTable<LambdaPoly> family_lambda_table_formal(std::size_t l_max, std::size_t slack)
{
    auto plan = family_plan(l_max, slack);
    const LambdaPoly lam = LambdaPoly::x();
    auto table = build_ansatz_table(family_spec<LambdaPoly>(lam), plan.r_depth);
    return lambda_table(table, l_max, [&](std::size_t l) { return family_shape<LambdaPoly>(l, lam); }, slack);
}

FamilyHSeries h_series_family(std::size_t k_max, bool formal, std::size_t slack, unsigned threads)
{
    FamilyHSeries out;
    out.formal = formal;
    if (formal) {
        out.coefficients = family_h_coefficients(family_lambda_table_formal(k_max, slack).lambda);
    } else {
        // λ = 1, −1, 2, −2, ...
        for (std::size_t i = 0; i < k_max + 3; ++i) {
            long v = static_cast<long>(i / 2 + 1);
            out.lambda_points.emplace_back(i % 2 ? -v : v);
        }
        const std::size_t count = out.lambda_points.size();
        std::vector<std::vector<BigRational>> h(count);
        std::vector<std::exception_ptr> errors(count);
        std::atomic<std::size_t> next{0};
        if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
        auto worker = [&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    h[i] = family_h_coefficients(family_lambda_table(k_max, out.lambda_points[i], slack).lambda,
                                                 out.lambda_points[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (std::size_t k = 0; k <= k_max; ++k) {
            std::vector<std::pair<BigRational, BigRational>> pts;
            for (std::size_t i = 0; i < count; ++i) pts.emplace_back(out.lambda_points[i], h[i][k]);
            out.coefficients.push_back(lagrange_interpolate(pts));
        }
    }
    for (std::size_t k = 0; k < out.coefficients.size(); ++k)
        out.degree_ok.push_back(out.coefficients[k].degree() <= static_cast<long>(k));
    return out;
}

BigFloat resum_f(const Polynomial<BigRational>& f_n, long m_max, mpfr_prec_t precision)
{
    BigRational sum = 0;
    BigInt fact = 1;
    for (long m = 0; m <= m_max; ++m) {
        if (m > 0) fact *= static_cast<unsigned long>(m);
        sum += f_n.evaluate(BigRational(m)) / BigRational(fact);
    }
    return BigFloat(sum, precision) * exp(BigFloat(-1L, precision));
}

#define TAKEUCHI_ANSATZ_INSTANTIATE(T)                                                                              \
    template struct AnsatzTable<T>;                                                                                  \
    template struct ExpPolyCombination<T>;                                                                           \
    template struct FitShape<T>;                                                                                     \
    template std::vector<Polynomial<T>> build_f(const RecurrenceSpec<T>&, std::size_t);                              \
    template void interpolate_r(AnsatzTable<T>&, std::size_t);                                                       \
    template AnsatzTable<T> build_ansatz_table(const RecurrenceSpec<T>&, std::size_t);                               \
    template TruncatedPowerSeries<T> rl_series(const AnsatzTable<T>&, std::size_t, std::size_t);                     \
    template FitShape<T> takeuchi_shape(std::size_t);                                                                \
    template FitShape<T> family_shape(std::size_t, const T&);                                                        \
    template ExpPolyCombination<T> fit_exp_poly(const TruncatedPowerSeries<T>&, const FitShape<T>&, std::size_t);

TAKEUCHI_ANSATZ_INSTANTIATE(BigRational)
TAKEUCHI_ANSATZ_INSTANTIATE(LambdaPoly)

} // namespace takeuchi
