#include "takeuchi/extrapolation.hpp"

#include "takeuchi/asymptotics.hpp"
#include "takeuchi/errors.hpp"
#include "takeuchi/linear_solve.hpp"

#include <algorithm>
#include <cmath>

namespace takeuchi {

namespace {

BigFloat num(long v, mpfr_prec_t p) { return BigFloat(v, p); }

struct Cx {
    BigFloat re, im;
};

Cx cx(const GaussianRational& z, mpfr_prec_t p) { return {BigFloat(z.re(), p), BigFloat(z.im(), p)}; }
Cx mul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx div(const Cx& a, const Cx& b)
{
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigFloat basis_value(const ScaleTerm& t, const BigFloat& w, const BigFloat& exp_minus_w)
{
    return pow(exp_minus_w, t.j) * pow(num(1, w.precision()) + w, -t.i);
}

} // namespace

std::string to_string(AccelMethod m)
{
    switch (m) {
    case AccelMethod::Wynn: return "wynn";
    case AccelMethod::Aitken: return "aitken";
    case AccelMethod::Richardson: return "richardson";
    }
    return "?";
}

AccelMethod parse_accel_method(const std::string& name)
{
    if (name == "wynn") return AccelMethod::Wynn;
    if (name == "aitken") return AccelMethod::Aitken;
    if (name == "richardson" || name == "richardson-in-x") return AccelMethod::Richardson;
    throw DomainError("unknown acceleration method '" + name + "'");
}

Tableau accelerate(const std::vector<BigFloat>& seq, AccelMethod method, const std::vector<BigFloat>* scale)
{
    if (seq.size() < 3) throw DomainError("acceleration needs at least 3 terms");
    Tableau t{seq};
    switch (method) {
    case AccelMethod::Aitken: {
        auto cur = seq;
        while (cur.size() >= 3) {
            std::vector<BigFloat> next;
            for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
                BigFloat d1 = cur[i + 1] - cur[i], d2 = cur[i + 2] - cur[i + 1];
                BigFloat den = d2 - d1;
                if (den.is_zero()) {
                    next.push_back(cur[i + 2]);
                    continue;
                }
                next.push_back(cur[i + 2] - d2 * d2 / den);
            }
            t.push_back(next);
            cur = std::move(next);
        }
        break;
    }
    case AccelMethod::Wynn: {
        const mpfr_prec_t p = seq.front().precision();
        std::vector<BigFloat> prev(seq.size() + 1, BigFloat::zero(p));
        std::vector<BigFloat> cur = seq;
        for (std::size_t k = 1; cur.size() >= 2; ++k) {
            std::vector<BigFloat> next;
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                BigFloat diff = cur[i + 1] - cur[i];
                if (diff.is_zero()) return t; // converged or degenerate; stop cleanly
                next.push_back(prev[i + 1] + num(1, p) / diff);
            }
            prev = std::move(cur);
            cur = std::move(next);
            if (k % 2 == 0) t.push_back(cur);
        }
        break;
    }
    case AccelMethod::Richardson: {
        if (!scale || scale->size() != seq.size()) throw DomainError("richardson needs a scale of the same length");
        for (std::size_t i = 0; i < scale->size(); ++i) {
            if ((*scale)[i].sign() <= 0) throw DomainError("richardson scale must be positive");
            if (i && !((*scale)[i] < (*scale)[i - 1])) throw DomainError("richardson scale must decrease");
        }
        const auto& x = *scale;
        auto cur = seq;
        for (std::size_t j = 1; cur.size() >= 2; ++j) {
            std::vector<BigFloat> next;
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                // Neville step to x = 0 using x_i and x_{i+j}.
                const auto& xa = x[i];
                const auto& xb = x[i + j];
                next.push_back((cur[i + 1] * xa - cur[i] * xb) / (xa - xb));
            }
            t.push_back(next);
            cur = std::move(next);
        }
        break;
    }
    }
    return t;
}

BigFloat best_entry(const Tableau& t)
{
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        if (!it->empty()) return it->back();
    throw DomainError("empty tableau");
}

std::vector<ScaleTerm> expand_groups(const std::vector<ScaleGroup>& groups)
{
    std::vector<ScaleTerm> out;
    for (const auto& g : groups)
        for (int k = 0; k < g.count; ++k) out.push_back({g.j, g.first_i + k});
    return out;
}

BigFloat scale_basis_fit(const std::vector<BigFloat>& values, const std::vector<BigFloat>& w,
                         const std::vector<ScaleTerm>& basis)
{
    const std::size_t k = basis.size() + 1;
    if (values.size() != k || w.size() != k) throw DomainError("scale_basis_fit needs exactly |basis|+1 points");
    const mpfr_prec_t p = values.front().precision();
    std::vector<std::vector<BigFloat>> a;
    for (std::size_t r = 0; r < k; ++r) {
        BigFloat em = exp(-w[r]);
        std::vector<BigFloat> row{num(1, p)};
        for (const auto& t : basis) row.push_back(basis_value(t, w[r], em));
        a.push_back(std::move(row));
    }
    return solve_float(std::move(a), values)[0];
}

const std::vector<std::vector<ScaleGroup>>& default_scale_settings()
{
    static const std::vector<std::vector<ScaleGroup>> s = {
        {{2, 0, 5}, {3, 0, 2}},
        {{2, 0, 8}, {3, 0, 4}, {4, 0, 2}},
        {{2, 0, 10}, {3, 0, 6}, {4, 0, 3}, {5, 0, 1}},
    };
    return s;
}

namespace {

struct Sample {
    std::vector<BigFloat> re, im, w;
    std::size_t n_lo = 0;
};

/// Fits each setting on the last |basis|+1 samples; returns (re, im) per setting.
std::vector<std::pair<BigFloat, std::optional<BigFloat>>> run_settings(const Sample& s, bool complex_valued)
{
    std::vector<std::pair<BigFloat, std::optional<BigFloat>>> out;
    for (const auto& groups : default_scale_settings()) {
        auto basis = expand_groups(groups);
        const std::size_t k = basis.size() + 1;
        if (s.re.size() < k) throw DomainError("not enough samples for the scale-basis fit");
        auto tail = [&](const std::vector<BigFloat>& v) { return std::vector<BigFloat>(v.end() - k, v.end()); };
        BigFloat re = scale_basis_fit(tail(s.re), tail(s.w), basis);
        std::optional<BigFloat> im;
        if (complex_valued) im = scale_basis_fit(tail(s.im), tail(s.w), basis);
        out.emplace_back(std::move(re), std::move(im));
    }
    return out;
}

int agreement(const std::pair<BigFloat, std::optional<BigFloat>>& a,
              const std::pair<BigFloat, std::optional<BigFloat>>& b)
{
    int d = agreeing_digits(a.first, b.first);
    if (a.second && b.second && !a.second->is_zero()) d = std::min(d, agreeing_digits(*a.second, *b.second));
    return d;
}

int depth_of(const std::vector<ScaleGroup>& g) { return static_cast<int>(expand_groups(g).size()); }

/// Shared driver: `sampler(prec)` returns samples ending at n_max.
template <class Sampler>
ExtrapolationResult extrapolate(Sampler sampler, bool complex_valued, std::size_t n_max, mpfr_prec_t precision,
                                const std::string& raw_name)
{
    Sample s = sampler(precision);
    auto fits = run_settings(s, complex_valued);
    auto hi = run_settings(sampler(precision + precision / 2), complex_valued);

    ExtrapolationResult r;
    r.precision_bits = precision;
    r.n_lo = s.n_lo;
    r.n_hi = n_max;
    const auto& settings = default_scale_settings();
    r.trace.push_back({raw_name, 0, s.re.back(), complex_valued ? std::optional(s.im.back()) : std::nullopt});

    // Cross-checks on the real part: Aitken and Wynn on geometrically spaced
    // samples, Richardson in e^{−2w} on the last six.
    std::vector<BigFloat> geo, geo_im;
    for (std::size_t idx = s.re.size(); idx-- > 0;) {
        std::size_t n = s.n_lo + idx;
        if (geo.size() >= 9) break;
        std::size_t want = static_cast<std::size_t>(static_cast<double>(n_max) * std::pow(0.9, static_cast<double>(geo.size())));
        if (n == want) {
            geo.push_back(s.re[idx]);
            geo_im.push_back(s.im[idx]);
        }
    }
    std::reverse(geo.begin(), geo.end());
    std::reverse(geo_im.begin(), geo_im.end());
    if (geo.size() >= 3) {
        for (auto m : {AccelMethod::Aitken, AccelMethod::Wynn}) {
            auto t = accelerate(geo, m);
            std::optional<BigFloat> im;
            if (complex_valued) im = best_entry(accelerate(geo_im, m));
            r.trace.push_back({to_string(m), static_cast<int>(t.size() - 1), best_entry(t), im});
        }
    }
    {
        const std::size_t k = std::min<std::size_t>(6, s.re.size());
        std::vector<BigFloat> v(s.re.end() - static_cast<long>(k), s.re.end());
        std::vector<BigFloat> vi(s.im.end() - static_cast<long>(k), s.im.end());
        std::vector<BigFloat> x;
        for (std::size_t i = s.re.size() - k; i < s.re.size(); ++i) x.push_back(exp(-(s.w[i] + s.w[i])));
        if (k >= 3) {
            auto t = accelerate(v, AccelMethod::Richardson, &x);
            std::optional<BigFloat> im;
            if (complex_valued) im = best_entry(accelerate(vi, AccelMethod::Richardson, &x));
            r.trace.push_back({"richardson-e^{-2w}", static_cast<int>(t.size() - 1), best_entry(t), im});
        }
    }
    for (std::size_t i = 0; i < fits.size(); ++i)
        r.trace.push_back({"scale-basis", depth_of(settings[i]), fits[i].first, fits[i].second});
    r.trace.push_back({"scale-basis@" + std::to_string(precision + precision / 2), depth_of(settings.back()),
                       hi.back().first, hi.back().second});

    r.estimate = fits.back().first;
    r.estimate_imag = fits.back().second;
    const int spread = agreement(fits[fits.size() - 1], fits[fits.size() - 2]);
    const int noise = agreement(fits.back(), hi.back());
    if (noise <= spread)
        throw PrecisionError("extrapolation is precision-limited: " + std::to_string(noise) +
                             " digits survive a 1.5x precision change but the fits agree to " +
                             std::to_string(spread) + "; raise precision_bits");
    r.stable_digits = spread;
    return r;
}

constexpr std::size_t kSpan = 60;

/// Low enough for the deepest fit and for nine 0.9-geometric samples.
std::size_t first_sample(std::size_t n_max)
{
    return std::min<std::size_t>(n_max - kSpan, static_cast<std::size_t>(static_cast<double>(n_max) * 0.43));
}

} // namespace

ExtrapolationResult estimate_CT(const IntegerTable& t, const IntegerTable& b, std::size_t n_max,
                                mpfr_prec_t precision)
{
    if (n_max < 200) throw DomainError("estimate_CT requires n_max >= 200");
    if (t.values.size() < n_max + 2 || b.values.size() < n_max + 1)
        throw DomainError("estimate_CT needs T to n_max+1 and B to n_max");
    auto sampler = [&](mpfr_prec_t p) {
        Sample s;
        s.n_lo = first_sample(n_max);
        for (std::size_t n = s.n_lo; n <= n_max; ++n) {
            WValue v = WValue::of(static_cast<long>(n), p + 32);
            BigFloat ratio = BigFloat(t[n + 1], p + 32) / BigFloat(b[n], p + 32);
            BigFloat u = ratio / exp(v.w * v.w / num(2, p + 32) + v.w);
            s.re.push_back(u.with_precision(p));
            s.im.push_back(BigFloat::zero(p));
            s.w.push_back(v.w.with_precision(p));
        }
        return s;
    };
    return extrapolate(sampler, false, n_max, precision, "u_n");
}

ExtrapolationResult estimate_CT(std::size_t n_max, mpfr_prec_t precision)
{
    return estimate_CT(takeuchi_numbers(n_max + 1), bell_numbers(n_max), n_max, precision);
}

std::vector<ComplexLog> family_log_ratio(const SequenceTable<GaussianRational>& a, const IntegerTable& b,
                                         const GaussianRational& lambda, mpfr_prec_t precision)
{
    const std::size_t n_max = std::min(a.values.size(), b.values.size()) - 1;
    const mpfr_prec_t p = precision + 32;
    const BigFloat two_pi = num(2, p) * pi(p);
    const BigFloat lam_im(lambda.im(), p);
    std::vector<ComplexLog> out;
    BigFloat prev_phase = BigFloat::zero(p);
    BigFloat prev_scale = BigFloat::zero(p);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto& z = a[n];
        if (is_zero(z)) throw DomainError("A_" + std::to_string(n) + " vanishes; log undefined");
        BigFloat re(z.re(), p), im(z.im(), p);
        BigFloat modulus_log = log(hypot(re, im));
        BigFloat phase = atan2(im, re);
        // Predicted increment from the leading λ(w²/2 + w) growth.
        BigFloat scale = BigFloat::zero(p);
        if (n >= 1) {
            WValue v = WValue::of(static_cast<long>(n), p);
            scale = v.w * v.w / num(2, p) + v.w;
        }
        if (n > 0) {
            BigFloat expected = prev_phase + lam_im * (scale - prev_scale);
            BigFloat k = (expected - phase) / two_pi;
            long kk = std::lround(k.to_double());
            phase += num(kk, p) * two_pi;
            BigFloat miss = abs(phase - expected);
            if (n > 2 && miss > pi(p) / num(2, p))
                throw DomainError("branch tracking failed at n=" + std::to_string(n) +
                                  ": phase step is ambiguous");
        }
        prev_phase = phase;
        prev_scale = scale;
        out.push_back({(modulus_log - log_of(b[n], p)).with_precision(precision), phase.with_precision(precision)});
    }
    return out;
}

ExtrapolationResult estimate_d_lambda(const GaussianRational& lambda, const SequenceTable<GaussianRational>& a,
                                      const IntegerTable& b, std::size_t n_max, mpfr_prec_t precision)
{
    if (is_zero(lambda)) throw DomainError("d(λ) is undefined at λ = 0 (A_n = B_n)");
    if (n_max < 200) throw DomainError("estimate_d_lambda requires n_max >= 200");
    if (a.values.size() < n_max + 1 || b.values.size() < n_max + 1)
        throw DomainError("estimate_d_lambda needs A and B to n_max");
    const bool complex_valued = sgn(lambda.im()) != 0;
    auto sampler = [&](mpfr_prec_t p) {
        auto logs = family_log_ratio(a, b, lambda, p + 32);
        Cx lam = cx(lambda, p + 32);
        Sample s;
        s.n_lo = first_sample(n_max);
        for (std::size_t n = s.n_lo; n <= n_max; ++n) {
            WValue v = WValue::of(static_cast<long>(n), p + 32);
            Cx q = div({logs[n].re, logs[n].im}, lam);
            BigFloat em = num(1, p + 32) / v.exp_w;
            BigFloat base = v.w * v.w / num(2, p + 32) + v.w;
            // + (λ+1)/2 e^{−w}
            BigFloat re = q.re - base + (lam.re + num(1, p + 32)) * em / num(2, p + 32);
            BigFloat im = q.im + lam.im * em / num(2, p + 32);
            s.re.push_back(re.with_precision(p));
            s.im.push_back(im.with_precision(p));
            s.w.push_back(v.w.with_precision(p));
        }
        return s;
    };
    return extrapolate(sampler, complex_valued, n_max, precision, "v_n");
}

ExtrapolationResult estimate_d_lambda(const GaussianRational& lambda, std::size_t n_max, mpfr_prec_t precision)
{
    return estimate_d_lambda(lambda, family_numbers(n_max, lambda), bell_numbers(n_max), n_max, precision);
}

BigFloat family_residual(const GaussianRational& lambda, const std::vector<ComplexLog>& log_ratio, std::size_t n,
                         const BigFloat& d_re, const BigFloat& d_im)
{
    const mpfr_prec_t p = d_re.precision();
    WValue v = WValue::of(static_cast<long>(n), p);
    Cx lam = cx(lambda, p);
    BigFloat em = num(1, p) / v.exp_w;
    BigFloat base = v.w * v.w / num(2, p) + v.w;
    Cx inner{base + d_re - (lam.re + num(1, p)) * em / num(2, p), d_im - lam.im * em / num(2, p)};
    Cx model = mul(lam, inner);
    const auto& lr = log_ratio.at(n);
    return hypot(lr.re - model.re, lr.im - model.im);
}

} // namespace takeuchi
