#pragma once

#include "takeuchi/gaussian_rational.hpp"
#include "takeuchi/power_series.hpp"
#include "takeuchi/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace takeuchi {

/// One checked equation: both sides compared coefficientwise through `order`.
struct ClauseResult {
    std::string name;
    bool pass = false;
    std::optional<std::size_t> first_failing_order;
};

struct VerificationReport {
    std::string what;
    std::size_t order = 0;
    std::vector<ClauseResult> clauses;

    bool pass() const
    {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }
};

/// The series y(z) with y(0) = 0 and y = z(1+y)^{λ+1}, through order K.
template <class T>
TruncatedPowerSeries<T> solve_y(const T& lambda, std::size_t order);

/// Σ binom(n+(λ+1)k, k) z^k against both closed forms and the product identity.
template <class T>
VerificationReport verify_identity(const T& lambda, unsigned long n, std::size_t order);

/// A(z) = 1 + z(1+y)/(1−λy)·A(z(1+y)) with A_n from the λ-family recurrence.
template <class T>
VerificationReport verify_family_functional_equation(const T& lambda, std::size_t order);

/// Both forms of the Takeuchi generating-function equation, using T_0..T_{K+1}.
VerificationReport verify_takeuchi_functional_equation(std::size_t order);
VerificationReport verify_takeuchi_functional_equation(const IntegerTable& takeuchi, std::size_t order);

/// Σ B_n z^n/n! = exp(e^z − 1).
VerificationReport verify_bell_egf(std::size_t order);

/// Σ_k binom(n+2k, k) z^k = C(z)^n / sqrt(1−4z).
VerificationReport verify_special_case_identity(unsigned long n, std::size_t order);

/// Series with integer coefficients as exact rationals.
TruncatedPowerSeries<BigRational> to_series(const IntegerTable& table, std::size_t order);

} // namespace takeuchi
