#include "takeuchi/linear_solve.hpp"

namespace takeuchi {

std::vector<BigFloat> solve_float(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b)
{
    const std::size_t n = a.size();
    if (b.size() != n) throw DomainError("solve_float: size mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        if (a[c].size() != n) throw DomainError("solve_float: matrix not square");
        std::size_t p = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (abs(a[i][c]) > abs(a[p][c])) p = i;
        if (a[p][c].is_zero()) throw DomainError("solve_float: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            BigFloat f = a[i][c] / a[c][c];
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<BigFloat> x(n, BigFloat::zero(b.empty() ? BigFloat::kDefaultPrecision : b[0].precision()));
    for (std::size_t i = n; i-- > 0;) {
        BigFloat s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

std::pair<std::vector<BigFloat>, std::vector<BigFloat>> least_squares(
    const std::vector<std::vector<BigFloat>>& a, const std::vector<BigFloat>& b)
{
    const std::size_t m = a.size();
    if (m == 0 || b.size() != m) throw DomainError("least_squares: size mismatch");
    const std::size_t n = a[0].size();
    const mpfr_prec_t prec = b[0].precision();
    std::vector<std::vector<BigFloat>> ata(n, std::vector<BigFloat>(n, BigFloat::zero(prec)));
    std::vector<BigFloat> atb(n, BigFloat::zero(prec));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t r = 0; r < n; ++r) {
            atb[r] += a[i][r] * b[i];
            for (std::size_t c = 0; c < n; ++c) ata[r][c] += a[i][r] * a[i][c];
        }
    auto x = solve_float(ata, atb);
    std::vector<BigFloat> residual;
    residual.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        BigFloat s = b[i];
        for (std::size_t c = 0; c < n; ++c) s -= a[i][c] * x[c];
        residual.push_back(s);
    }
    return {x, residual};
}

} // namespace takeuchi
