#pragma once

#include "takeuchi/big_float.hpp"
#include "takeuchi/polynomial.hpp"
#include "takeuchi/power_series.hpp"
#include "takeuchi/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace takeuchi {

/// f_n(m) for n = 0..N together with the d and r tables derived from it.
/// d_{n,k} is the coefficient of m^{n−k} in f_n; r[k][l] is the coefficient of
/// n^{k−l} in the degree-k polynomial d_{·,k}.
template <class T>
struct AnsatzTable {
    std::string spec_name;
    std::vector<Polynomial<T>> f;
    std::vector<std::vector<T>> r;

    std::size_t f_depth() const { return f.size() - 1; }
    /// Largest k with r[k] available; −1 when empty.
    long r_depth() const { return static_cast<long>(r.size()) - 1; }
    T d(std::size_t n, std::size_t k) const;
};

/// f_{m,n} = m Σ_{k=1}^{n} c_{n,k} f_{m−1,n−k} + b_n, f_0 = a_0, for n ≤ N.
template <class T>
std::vector<Polynomial<T>> build_f(const RecurrenceSpec<T>& spec, std::size_t n_max);

/// Interpolates d_{·,k} on n = k..2k+2 for k ≤ k_max and stores r. Needs f to
/// depth 2·k_max+2. Throws StructureError if the k+3 samples do not lie on a
/// polynomial of degree ≤ k.
template <class T>
void interpolate_r(AnsatzTable<T>& table, std::size_t k_max);

/// f to depth 2K+2 and r to depth K.
template <class T>
AnsatzTable<T> build_ansatz_table(const RecurrenceSpec<T>& spec, std::size_t k_max);

/// r_l(v) = Σ_k r_{l+k,l} v^k through v^{order}. Throws DepthError naming the
/// required r depth when the table is too shallow.
template <class T>
TruncatedPowerSeries<T> rl_series(const AnsatzTable<T>& table, std::size_t l, std::size_t order);

/// e^{γv²/2 + βv} Σ_j p_j(v) e^{jv}.
template <class T>
struct ExpPolyCombination {
    struct Term {
        long j;
        Polynomial<T> p;
    };
    T gamma;
    T beta;
    std::vector<Term> terms;

    /// p_j, or the zero polynomial when j is absent.
    Polynomial<T> term(long j) const;
    /// Taylor coefficients through v^{order}.
    TruncatedPowerSeries<T> expand(std::size_t order) const;
};

/// Shape of the exponential-polynomial ansatz for one l: which e^{jv} occur and
/// the degree of each p_j.
template <class T>
struct FitShape {
    T gamma;
    T beta;
    std::vector<std::pair<long, std::size_t>> j_degree;

    std::size_t unknowns() const;
};

/// e^{v²/2} Σ_{j=1}^{l} p_j e^{jv} with deg p_j = 3(l−j).
template <class T>
FitShape<T> takeuchi_shape(std::size_t l);
/// e^{λv²/2+λv} Σ_{j=0}^{l} p_j e^{jv} with deg p_j = 3(l−j).
template <class T>
FitShape<T> family_shape(std::size_t l, const T& lambda);

inline constexpr std::size_t kDefaultSlack = 10;

/// Exact fit of `series` to the shape. All series coefficients beyond the
/// unknown count are surplus equations; any mismatch throws StructureError.
/// Throws DepthError when the series has fewer than unknowns + slack terms.
template <class T>
ExpPolyCombination<T> fit_exp_poly(const TruncatedPowerSeries<T>& series, const FitShape<T>& shape,
                                   std::size_t slack = kDefaultSlack);

/// Table depths needed for fits l = 0..l_max.
struct AnsatzPlan {
    std::size_t l_max = 0;
    std::size_t slack = kDefaultSlack;
    /// Series coefficients used per l.
    std::vector<std::size_t> series_terms;
    /// r depth K and f depth N = 2K+2.
    std::size_t r_depth = 0;
    std::size_t f_depth = 0;
};

/// `unknowns(l)` gives the unknown count of the shape at l.
template <class Unknowns>
AnsatzPlan plan_ansatz(std::size_t l_max, std::size_t slack, Unknowns unknowns)
{
    AnsatzPlan plan;
    plan.l_max = l_max;
    plan.slack = slack;
    for (std::size_t l = 0; l <= l_max; ++l) {
        std::size_t terms = unknowns(l) + slack;
        plan.series_terms.push_back(terms);
        plan.r_depth = std::max(plan.r_depth, l + terms - 1);
    }
    plan.f_depth = 2 * plan.r_depth + 2;
    return plan;
}

AnsatzPlan takeuchi_plan(std::size_t l_max, std::size_t slack = kDefaultSlack);
AnsatzPlan family_plan(std::size_t l_max, std::size_t slack = kDefaultSlack);

template <class T>
struct LambdaTable {
    std::vector<T> lambda;
    std::vector<ExpPolyCombination<T>> fits;
};

/// λ_l = constant term of the polynomial attached to e^{lv}, l = 0..l_max.
template <class T, class ShapeOf>
LambdaTable<T> lambda_table(const AnsatzTable<T>& table, std::size_t l_max, ShapeOf shape_of,
                            std::size_t slack = kDefaultSlack)
{
    LambdaTable<T> out;
    for (std::size_t l = 0; l <= l_max; ++l) {
        FitShape<T> shape = shape_of(l);
        auto series = rl_series(table, l, shape.unknowns() + slack - 1);
        auto fit = fit_exp_poly(series, shape, slack);
        out.lambda.push_back(fit.term(static_cast<long>(l))[0]);
        out.fits.push_back(std::move(fit));
    }
    return out;
}

/// Full Takeuchi pipeline through l_max.
LambdaTable<BigRational> takeuchi_lambda_table(std::size_t l_max, std::size_t slack = kDefaultSlack);

/// μ_l = λ_l ((l−1)!)³ for l ≥ 1 (μ_0 = λ_0).
std::vector<BigRational> mu_values(const std::vector<BigRational>& lambdas);

/// Σ_{l≤L} λ_l for L = 0..size−1.
std::vector<BigFloat> h_partial_sums(const std::vector<BigRational>& lambdas, mpfr_prec_t precision);

/// Coefficients of (1/λ) log Σ_l λ_l x^l through x^{size−1}; requires λ_0 = 1.
std::vector<BigRational> family_h_coefficients(const std::vector<BigRational>& lambdas, const BigRational& lambda);
std::vector<LambdaPoly> family_h_coefficients(const std::vector<LambdaPoly>& lambdas);

/// λ_0..λ_{l_max} of the family at a fixed rational λ.
LambdaTable<BigRational> family_lambda_table(std::size_t l_max, const BigRational& lambda,
                                             std::size_t slack = kDefaultSlack);
/// Same with λ an indeterminate; coefficients in ℚ[λ].
LambdaTable<LambdaPoly> family_lambda_table_formal(std::size_t l_max, std::size_t slack = kDefaultSlack);

struct FamilyHSeries {
    /// h_k(λ) for k = 0..k_max (h_0 = 0).
    std::vector<LambdaPoly> coefficients;
    /// The λ sample points used; empty for the formal run.
    std::vector<BigRational> lambda_points;
    /// λ-degree of h_k does not exceed k.
    std::vector<bool> degree_ok;
    bool formal = false;
};

/// h_λ coefficients through x^{k_max}. With `formal`, runs the pipeline over
/// ℚ[λ]; otherwise evaluates at k_max+3 integer λ values (in parallel) and
/// interpolates in λ, so each h_k has at least two surplus samples.
FamilyHSeries h_series_family(std::size_t k_max, bool formal = false, std::size_t slack = kDefaultSlack,
                              unsigned threads = 0);

/// (1/e) Σ_{m=0}^{M} f_n(m)/m! at the given precision; the partial sum is exact.
BigFloat resum_f(const Polynomial<BigRational>& f_n, long m_max, mpfr_prec_t precision);

} // namespace takeuchi
