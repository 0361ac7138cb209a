#pragma once

#include "takeuchi/big_float.hpp"
#include "takeuchi/errors.hpp"
#include "takeuchi/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace takeuchi {

/// Dense row-major matrix of exact rationals.
using RationalMatrix = std::vector<std::vector<BigRational>>;

/// Outcome of an exact overdetermined solve.
template <class T>
struct ExactSolution {
    std::vector<T> x;
    /// Index of the first equation (in input order) whose surplus residual is
    /// nonzero; empty when every equation is satisfied exactly.
    std::optional<std::size_t> first_inconsistent_row;
};

/// Solves A·x = b exactly for x, where A has full column rank and at least as
/// many rows as columns. The matrix lives over ℚ; the right-hand side may live
/// in any ℚ-module T (ℚ, ℚ(i), ℚ[λ]). Rows beyond the pivots are surplus
/// equations and their residuals are checked exactly.
///
/// Throws StructureError when A is rank deficient.
template <class T>
ExactSolution<T> solve_exact(RationalMatrix a, std::vector<T> b)
{
    using takeuchi::is_zero;
    const std::size_t rows = a.size();
    if (rows != b.size()) throw DomainError("solve_exact: row count mismatch");
    const std::size_t cols = rows ? a[0].size() : 0;
    if (rows < cols) throw DomainError("solve_exact: underdetermined system");
    std::vector<std::size_t> origin(rows);
    for (std::size_t i = 0; i < rows; ++i) origin[i] = i;

    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = c;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) throw StructureError("solve_exact: rank deficient at column " + std::to_string(c));
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        std::swap(origin[p], origin[c]);
        BigRational inv = BigRational(1) / a[c][c];
        for (std::size_t j = c; j < cols; ++j) a[c][j] *= inv;
        b[c] = b[c] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            BigRational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[c][j];
            b[i] = b[i] - b[c] * f;
        }
    }
    ExactSolution<T> out;
    out.x.assign(b.begin(), b.begin() + static_cast<long>(cols));
    for (std::size_t i = cols; i < rows; ++i) {
        if (!is_zero(b[i])) {
            if (!out.first_inconsistent_row || origin[i] < *out.first_inconsistent_row)
                out.first_inconsistent_row = origin[i];
        }
    }
    return out;
}

/// Square floating solve with partial pivoting at the precision of the inputs.
std::vector<BigFloat> solve_float(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b);

/// Ordinary least squares via the normal equations; returns coefficients and
/// the residual vector.
std::pair<std::vector<BigFloat>, std::vector<BigFloat>> least_squares(
    const std::vector<std::vector<BigFloat>>& a, const std::vector<BigFloat>& b);

} // namespace takeuchi
