#pragma once

#include "takeuchi/big_float.hpp"
#include "takeuchi/gaussian_rational.hpp"
#include "takeuchi/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace takeuchi {

enum class AccelMethod { Wynn, Aitken, Richardson };

std::string to_string(AccelMethod m);
AccelMethod parse_accel_method(const std::string& name);

/// Column 0 is the input; each later column is one acceleration step. Wynn
/// keeps only the even ε columns. Stops early rather than divide by zero.
using Tableau = std::vector<std::vector<BigFloat>>;

/// `scale` is required for Richardson: the extrapolation variable x_n → 0,
/// strictly decreasing and positive.
Tableau accelerate(const std::vector<BigFloat>& seq, AccelMethod method,
                   const std::vector<BigFloat>* scale = nullptr);

/// Last entry of the deepest column.
BigFloat best_entry(const Tableau& t);

/// One basis function e^{−j w}(1+w)^{−i}.
struct ScaleTerm {
    int j;
    int i;
};

/// e^{−jw}(1+w)^{−i} for i = first_i .. first_i + count − 1, per listed j.
struct ScaleGroup {
    int j;
    int first_i;
    int count;
};

std::vector<ScaleTerm> expand_groups(const std::vector<ScaleGroup>& groups);

/// Solves values[k] = c + Σ a_t φ_t(w[k]) exactly on |basis|+1 points and
/// returns c.
BigFloat scale_basis_fit(const std::vector<BigFloat>& values, const std::vector<BigFloat>& w,
                         const std::vector<ScaleTerm>& basis);

struct TraceEntry {
    std::string method;
    int depth = 0;
    BigFloat value;
    std::optional<BigFloat> imag;
};

struct ExtrapolationResult {
    BigFloat estimate;
    std::optional<BigFloat> estimate_imag;
    int stable_digits = 0;
    std::vector<TraceEntry> trace;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    mpfr_prec_t precision_bits = 0;
};

/// Fit settings used from shallowest to deepest; the last one gives the estimate.
const std::vector<std::vector<ScaleGroup>>& default_scale_settings();

/// C_T from u_n = T_{n+1}/(B_n e^{w²/2+w}) for n near n_max. The tables must
/// reach n_max+1. Throws PrecisionError if recomputing at 1.5× precision moves
/// the estimate at least as much as the spread between the two deepest fits.
ExtrapolationResult estimate_CT(const IntegerTable& t, const IntegerTable& b, std::size_t n_max,
                                mpfr_prec_t precision);
ExtrapolationResult estimate_CT(std::size_t n_max, mpfr_prec_t precision);

/// log A_n − log B_n for n = 0..N with the imaginary part unwrapped
/// continuously in n. Throws DomainError if A_n = 0 or a phase step is
/// ambiguous.
struct ComplexLog {
    BigFloat re, im;
};
std::vector<ComplexLog> family_log_ratio(const SequenceTable<GaussianRational>& a, const IntegerTable& b,
                                         const GaussianRational& lambda, mpfr_prec_t precision);

/// d(λ) from v_n = (log A_n − log B_n)/λ − w²/2 − w + (λ+1)/2 e^{−w}.
ExtrapolationResult estimate_d_lambda(const GaussianRational& lambda, std::size_t n_max, mpfr_prec_t precision);
ExtrapolationResult estimate_d_lambda(const GaussianRational& lambda, const SequenceTable<GaussianRational>& a,
                                      const IntegerTable& b, std::size_t n_max, mpfr_prec_t precision);

/// Residual log A_n − log B_n − λ(w²/2 + w + d − (λ+1)/2 e^{−w}) at n, for the
/// complex estimate d = (d_re, d_im); returns its modulus.
BigFloat family_residual(const GaussianRational& lambda, const std::vector<ComplexLog>& log_ratio, std::size_t n,
                         const BigFloat& d_re, const BigFloat& d_im);

} // namespace takeuchi
