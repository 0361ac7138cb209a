#pragma once

#include "takeuchi/big_float.hpp"
#include "takeuchi/sequences.hpp"

#include <optional>
#include <vector>

namespace takeuchi {

/// Principal branch of Lambert W for x >= 0.
BigFloat lambert_w(const BigFloat& x, mpfr_prec_t precision);

/// w = W(n) together with e^w = n/w.
struct WValue {
    long n = 0;
    BigFloat w;
    BigFloat exp_w;
    mpfr_prec_t precision_bits = BigFloat::kDefaultPrecision;

    static WValue of(long n, mpfr_prec_t precision);
};

/// Coefficients of log h(x) = h0 + h1 (x−1) + h2 (x−1)^2/2 + ...
struct HExpansion {
    BigFloat h0, h1, h2;
};

/// Partial sum of the log B_n expansion through the e^{−order·w} term.
BigFloat bell_log_asymptotic(long n, int order, mpfr_prec_t precision = BigFloat::kDefaultPrecision);
BigFloat bell_log_asymptotic(const WValue& w, int order);

/// Conjectured expansion of log T_n through the e^{−w} term.
BigFloat conjecture1_log_T(long n, const BigFloat& c_t, mpfr_prec_t precision = BigFloat::kDefaultPrecision);
BigFloat conjecture1_log_T(const WValue& w, const BigFloat& c_t);

/// T_{n+1}/T_n − B_n/B_{n−1}, exactly.
BigRational growth_gap_exact(const IntegerTable& t, const IntegerTable& b, std::size_t n);
BigFloat growth_gap(const IntegerTable& t, const IntegerTable& b, std::size_t n,
                    mpfr_prec_t precision = BigFloat::kDefaultPrecision);

/// Difference of growth rates T_n/T_{n−1} − B_n/B_{n−1}.
BigFloat figure1_value(const IntegerTable& t, const IntegerTable& b, std::size_t n,
                       mpfr_prec_t precision = BigFloat::kDefaultPrecision);

/// u_n = T_{n+1} / (B_n e^{w^2/2 + w}).
BigFloat figure2_ratio(const IntegerTable& t, const IntegerTable& b, std::size_t n,
                       mpfr_prec_t precision = BigFloat::kDefaultPrecision);

struct BoundsCheck {
    bool lower_ok = false;
    bool upper_ok = false;
    /// log T_n − lower exponent and upper exponent − log T_n.
    BigFloat lower_margin;
    BigFloat upper_margin;
};

/// e^{n log n − n log log n − n} < T_n < e^{n log n − n + log n}.
BoundsCheck knuth_bounds_check(const IntegerTable& t, std::size_t n,
                               mpfr_prec_t precision = BigFloat::kDefaultPrecision);

struct BellSum {
    BigFloat value;
    /// Upper bound on the omitted tail (1/e) Σ_{m>M} m^n/m!.
    BigFloat tail_bound;
    /// argmax of m^n/m!.
    long peak_m = 0;
};

/// (1/e) Σ_{m=0}^{M} m^n/m!. Throws DomainError when the tail bound does not
/// fall below 2^{−precision} relative to the sum.
BellSum bell_sum_approx(long n, long m_max, mpfr_prec_t precision = BigFloat::kDefaultPrecision);

/// log of the saddle-point approximation \hat T_n for a given h expansion.
BigFloat hatT_log(long n, const HExpansion& h, mpfr_prec_t precision = BigFloat::kDefaultPrecision);
BigFloat hatT_log(const WValue& w, const HExpansion& h);

struct HatTFit {
    BigFloat h1, h2;
    /// (log T_n − hatT_log(n)) · e^{w} at each fitted n, after the fit.
    std::vector<BigFloat> scaled_residuals;
    BigFloat rms_scaled_residual;
};

/// Least-squares choice of (h1, h2) with h0 = log C_T, matching log T_n over `ns`
/// at order e^{−w}.
HatTFit fit_hatT(const IntegerTable& t, const std::vector<long>& ns, const BigFloat& c_t,
                 mpfr_prec_t precision = BigFloat::kDefaultPrecision);

} // namespace takeuchi
