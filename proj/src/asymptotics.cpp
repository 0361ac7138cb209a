#include "takeuchi/asymptotics.hpp"

#include "takeuchi/errors.hpp"
#include "takeuchi/linear_solve.hpp"

#include <cmath>

namespace takeuchi {

namespace {

constexpr mpfr_prec_t kGuard = 32;

BigFloat num(long v, mpfr_prec_t p) { return BigFloat(v, p); }

BigFloat poly(const BigFloat& w, std::initializer_list<long> coeffs_high_first)
{
    BigFloat acc = BigFloat::zero(w.precision());
    for (long c : coeffs_high_first) acc = acc * w + num(c, w.precision());
    return acc;
}

BigFloat half(const BigFloat& x) { return x / num(2, x.precision()); }

/// e^w(w^2 − w + 1) − ½log(1+w) − 1, shared by the Bell and Takeuchi forms.
BigFloat leading(const WValue& v)
{
    const auto& w = v.w;
    auto p = v.precision_bits;
    return v.exp_w * poly(w, {1, -1, 1}) - half(log1p(w)) - num(1, p);
}

void require_n(long n, long min)
{
    if (n < min) throw DomainError("n must be at least " + std::to_string(min));
}

const BigInt& entry(const IntegerTable& t, std::size_t n)
{
    if (n >= t.values.size()) throw DomainError(t.name + " table too short for index " + std::to_string(n));
    return t.values[n];
}

} // namespace

BigFloat lambert_w(const BigFloat& x, mpfr_prec_t precision)
{
    if (x.sign() < 0) throw DomainError("lambert_w requires x >= 0");
    const mpfr_prec_t p = precision + kGuard;
    BigFloat xx = x.with_precision(p);
    if (xx.is_zero()) return BigFloat::zero(precision);
    const BigFloat e = exp(num(1, p));
    const BigFloat one = num(1, p);
    const bool small = xx < e;
    // Both starts lie above the root, where Newton is monotone.
    BigFloat w = small ? log1p(xx) : log(xx) - log(log(xx));
    const BigFloat tol = BigFloat(std::ldexp(1.0, 0), p) / pow(num(2, p), precision + 8);
    for (int it = 0; it < 200; ++it) {
        BigFloat ew = exp(w);
        BigFloat f = w * ew - xx;
        BigFloat fp = ew * (w + one);
        BigFloat step;
        if (small) {
            step = f / fp;
        } else {
            BigFloat fpp = ew * (w + num(2, p));
            step = f / (fp - f * fpp / (num(2, p) * fp));
        }
        w -= step;
        if (abs(step) <= tol * abs(w)) break;
    }
    return w.with_precision(precision);
}

WValue WValue::of(long n, mpfr_prec_t precision)
{
    require_n(n, 1);
    WValue v;
    v.n = n;
    v.precision_bits = precision;
    v.w = lambert_w(num(n, precision), precision);
    v.exp_w = num(n, precision) / v.w;
    return v;
}

BigFloat bell_log_asymptotic(const WValue& v, int order)
{
    if (order < 0 || order > 2) throw DomainError("bell_log_asymptotic order must be 0, 1 or 2");
    const auto& w = v.w;
    auto p = v.precision_bits;
    BigFloat result = leading(v);
    if (order >= 1) {
        BigFloat t = w * poly(w, {2, 7, 10}) / (num(24, p) * pow(w + num(1, p), 3));
        result -= t / v.exp_w;
    }
    if (order >= 2) {
        BigFloat t = w * poly(w, {2, 12, 29, 40, 36}) / (num(48, p) * pow(w + num(1, p), 6));
        result -= t / (v.exp_w * v.exp_w);
    }
    return result;
}

BigFloat bell_log_asymptotic(long n, int order, mpfr_prec_t precision)
{
    return bell_log_asymptotic(WValue::of(n, precision), order);
}

BigFloat conjecture1_log_T(const WValue& v, const BigFloat& c_t)
{
    if (c_t.sign() <= 0) throw DomainError("C_T must be positive");
    const auto& w = v.w;
    auto p = v.precision_bits;
    BigFloat correction = w * poly(w, {26, 67, 46}) / (num(24, p) * pow(w + num(1, p), 3));
    return leading(v) + half(w * w) + log(c_t.with_precision(p)) - correction / v.exp_w;
}

BigFloat conjecture1_log_T(long n, const BigFloat& c_t, mpfr_prec_t precision)
{
    return conjecture1_log_T(WValue::of(n, precision), c_t);
}

BigRational growth_gap_exact(const IntegerTable& t, const IntegerTable& b, std::size_t n)
{
    if (n < 1) throw DomainError("growth_gap requires n >= 1");
    return make_rational(entry(t, n + 1), entry(t, n)) - make_rational(entry(b, n), entry(b, n - 1));
}

BigFloat growth_gap(const IntegerTable& t, const IntegerTable& b, std::size_t n, mpfr_prec_t precision)
{
    return BigFloat(growth_gap_exact(t, b, n), precision);
}

BigFloat figure1_value(const IntegerTable& t, const IntegerTable& b, std::size_t n, mpfr_prec_t precision)
{
    if (n < 2) throw DomainError("figure1 requires n >= 2");
    BigRational d = make_rational(entry(t, n), entry(t, n - 1)) - make_rational(entry(b, n), entry(b, n - 1));
    return BigFloat(d, precision);
}

BigFloat figure2_ratio(const IntegerTable& t, const IntegerTable& b, std::size_t n, mpfr_prec_t precision)
{
    require_n(static_cast<long>(n), 1);
    const mpfr_prec_t p = precision + kGuard;
    WValue v = WValue::of(static_cast<long>(n), p);
    BigFloat ratio = BigFloat(entry(t, n + 1), p) / BigFloat(entry(b, n), p);
    return (ratio / exp(half(v.w * v.w) + v.w)).with_precision(precision);
}

BoundsCheck knuth_bounds_check(const IntegerTable& t, std::size_t n, mpfr_prec_t precision)
{
    require_n(static_cast<long>(n), 2);
    const mpfr_prec_t p = precision + kGuard;
    BigFloat nn = num(static_cast<long>(n), p);
    BigFloat log_n = log(nn);
    BigFloat log_t = log_of(entry(t, n), p);
    BigFloat lower = nn * log_n - nn * log(log_n) - nn;
    BigFloat upper = nn * log_n - nn + log_n;
    BoundsCheck r;
    r.lower_margin = (log_t - lower).with_precision(precision);
    r.upper_margin = (upper - log_t).with_precision(precision);
    // Rounding error in the exponents is far below this.
    BigFloat slack = abs(upper) / pow(num(2, p), precision);
    if (abs(r.lower_margin) <= slack || abs(r.upper_margin) <= slack)
        throw PrecisionError("Knuth bound margin below working precision at n=" + std::to_string(n));
    r.lower_ok = r.lower_margin.sign() > 0;
    r.upper_ok = r.upper_margin.sign() > 0;
    return r;
}

BellSum bell_sum_approx(long n, long m_max, mpfr_prec_t precision)
{
    if (n < 0 || m_max < 1) throw DomainError("bell_sum_approx requires n >= 0 and M >= 1");
    const mpfr_prec_t p = precision + kGuard;
    BellSum r;
    BigFloat sum = BigFloat::zero(p);
    BigFloat best = BigFloat::zero(p);
    BigFloat term = BigFloat::zero(p);
    BigFloat log_fact = BigFloat::zero(p);
    if (n == 0) sum = num(1, p); // the m = 0 term 0^0/0!
    for (long m = 1; m <= m_max; ++m) {
        log_fact += log(num(m, p));
        term = exp(num(n, p) * log(num(m, p)) - log_fact);
        sum += term;
        if (term > best) {
            best = term;
            r.peak_m = m;
        }
    }
    // For m >= M the term ratio is (1+1/m)^n/(m+1) <= e^{n/M}/(M+1) =: rho.
    BigFloat rho = exp(num(n, p) / num(m_max, p)) / num(m_max + 1, p);
    if (rho >= num(1, p)) throw DomainError("bell_sum_approx: M too small for a geometric tail bound");
    BigFloat tail = term * rho / (num(1, p) - rho);
    if (tail > sum / pow(num(2, p), precision))
        throw DomainError("bell_sum_approx: tail bound exceeds target precision; increase M");
    BigFloat inv_e = exp(num(-1, p));
    r.value = (sum * inv_e).with_precision(precision);
    r.tail_bound = (tail * inv_e).with_precision(precision);
    return r;
}

BigFloat hatT_log(const WValue& v, const HExpansion& h)
{
    const auto& w = v.w;
    auto p = v.precision_bits;
    BigFloat one = num(1, p);
    BigFloat base = leading(v) + half(w * w) + h.h0.with_precision(p);
    BigFloat t1 = w * poly(w, {12, 24, 36, 58, 29, -10}) / (num(24, p) * pow(w + one, 3));
    BigFloat h1 = h.h1.with_precision(p), h2 = h.h2.with_precision(p);
    BigFloat t2 = half((w + one) * (h1 * h1 + h2) + poly(w, {2, 1, 2}) * h1);
    return base + (t1 + t2) / v.exp_w;
}

BigFloat hatT_log(long n, const HExpansion& h, mpfr_prec_t precision)
{
    return hatT_log(WValue::of(n, precision), h);
}

HatTFit fit_hatT(const IntegerTable& t, const std::vector<long>& ns, const BigFloat& c_t, mpfr_prec_t precision)
{
    if (ns.size() < 2) throw DomainError("fit_hatT needs at least two n values");
    // Residual after h0 is linear in a = h1^2 + h2 and h1.
    std::vector<std::vector<BigFloat>> rows;
    std::vector<BigFloat> rhs;
    std::vector<WValue> ws;
    HExpansion base{log(c_t.with_precision(precision)), BigFloat::zero(precision), BigFloat::zero(precision)};
    for (long n : ns) {
        require_n(n, 2);
        WValue v = WValue::of(n, precision);
        BigFloat target = (log_of(entry(t, static_cast<std::size_t>(n)), precision) - hatT_log(v, base)) * v.exp_w;
        BigFloat one = num(1, precision);
        rows.push_back({half(v.w + one), half(poly(v.w, {2, 1, 2}))});
        rhs.push_back(target);
        ws.push_back(std::move(v));
    }
    auto [coeffs, residuals] = least_squares(rows, rhs);
    HatTFit fit;
    fit.h1 = coeffs[1];
    fit.h2 = coeffs[0] - coeffs[1] * coeffs[1];
    BigFloat ss = BigFloat::zero(precision);
    for (auto& r : residuals) ss += r * r;
    fit.scaled_residuals = residuals;
    fit.rms_scaled_residual = sqrt(ss / num(static_cast<long>(residuals.size()), precision));
    return fit;
}

} // namespace takeuchi
