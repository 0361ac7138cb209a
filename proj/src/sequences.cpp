#include "takeuchi/sequences.hpp"

#include "takeuchi/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace takeuchi {

IntegerTable catalan_numbers(std::size_t n_max)
{
    IntegerTable t{"catalan", {}};
    t.values.reserve(n_max + 1);
    BigInt c = 1;
    t.values.push_back(c);
    for (unsigned long n = 1; n <= n_max; ++n) {
        // C_n = C_{n-1} · 2(2n−1)/(n+1)
        c *= 2 * (2 * n - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1);
        t.values.push_back(c);
    }
    return t;
}

IntegerTable catalan_partial_sums(std::size_t n_max)
{
    IntegerTable cat = catalan_numbers(n_max);
    IntegerTable t{"catalan-partial-sums", {}};
    t.values.reserve(n_max + 1);
    BigInt acc = 0;
    t.values.push_back(acc);
    for (std::size_t n = 1; n <= n_max; ++n) {
        acc += cat[n];
        t.values.push_back(acc);
    }
    return t;
}

IntegerTable takeuchi_numbers(std::size_t n_max)
{
    IntegerTable t{"takeuchi", {}};
    t.values.reserve(n_max + 1);
    t.values.push_back(0);
    if (n_max == 0) return t;
    IntegerTable b = catalan_partial_sums(n_max);
    BigInt binom, ballot, acc;
    for (unsigned long n = 0; n + 1 <= n_max; ++n) {
        // T_{n+1} = Σ_{k=0}^{n} [binom(n+k,n) − binom(n+k,n+1)] T_{n−k} + b_{n+1};
        // the bracket equals binom(n+k,k)·(n+1−k)/(n+1).
        acc = b[n + 1];
        binom = 1;
        for (unsigned long k = 0; k <= n; ++k) {
            if (k > 0) {
                binom *= n + k;
                mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k);
            }
            ballot = binom * (n + 1 - k);
            mpz_divexact_ui(ballot.get_mpz_t(), ballot.get_mpz_t(), n + 1);
            acc += ballot * t.values[n - k];
        }
        t.values.push_back(acc);
    }
    return t;
}

IntegerTable bell_numbers(std::size_t n_max)
{
    IntegerTable t{"bell", {}};
    t.values.reserve(n_max + 1);
    t.values.push_back(1);
    BigInt binom, acc;
    for (unsigned long n = 0; n + 1 <= n_max; ++n) {
        acc = 0;
        binom = 1;
        for (unsigned long k = 0; k <= n; ++k) {
            if (k > 0) {
                binom *= n - k + 1;
                mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k);
            }
            acc += binom * t.values[n - k];
        }
        t.values.push_back(acc);
    }
    return t;
}

namespace {

template <class T>
SequenceTable<T> family_numbers_impl(std::size_t n_max, const T& lambda)
{
    using takeuchi::is_zero;
    SequenceTable<T> t{"family", {}};
    t.values.reserve(n_max + 1);
    t.values.push_back(T(BigRational(1)));
    // coeff[k] holds binom(n + λk, k) for the current n; updated along n with
    // binom(α+1, k) = binom(α, k)·(α+1)/(α+1−k) unless that ratio degenerates.
    std::vector<T> coeff;
    for (std::size_t n = 0; n + 1 <= n_max; ++n) {
        const T tn(BigRational(static_cast<long>(n)));
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            T kk(BigRational(static_cast<long>(k)));
            T alpha_next = tn + lambda * kk; // n + λk with the new n
            T denom = alpha_next - kk;
            if (is_zero(coeff[k]) || is_zero(denom))
                coeff[k] = binomial_general(alpha_next, k);
            else
                coeff[k] = coeff[k] * alpha_next / denom;
        }
        coeff.push_back(binomial_general(T(tn + lambda * T(BigRational(static_cast<long>(n)))), n));
        T acc{};
        for (std::size_t k = 0; k <= n; ++k) {
            if (is_zero(coeff[k])) continue;
            acc += coeff[k] * t.values[n - k];
        }
        t.values.push_back(std::move(acc));
    }
    return t;
}

} // namespace

SequenceTable<BigRational> family_numbers(std::size_t n_max, const BigRational& lambda)
{
    return family_numbers_impl<BigRational>(n_max, lambda);
}

SequenceTable<GaussianRational> family_numbers(std::size_t n_max, const GaussianRational& lambda)
{
    return family_numbers_impl<GaussianRational>(n_max, lambda);
}

namespace {

BigInt parse_value(std::string_view s, BigInt*) { return parse_integer(s); }
BigRational parse_value(std::string_view s, BigRational*) { return parse_rational(s); }
GaussianRational parse_value(std::string_view s, GaussianRational*) { return parse_gaussian(s); }

} // namespace

template <class T>
void write_sequence(std::ostream& out, const SequenceTable<T>& table)
{
    using takeuchi::to_string;
    out << "# " << table.name << ' ' << table.max_index() << ' ' << table.domain() << '\n';
    for (const auto& v : table.values) out << to_string(v) << '\n';
}

template <class T>
SequenceTable<T> read_sequence(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw DomainError("sequence file: missing header");
    std::istringstream header(line);
    std::string hash, name, domain;
    long n = -1;
    if (!(header >> hash >> name >> n >> domain) || hash != "#" || n < 0)
        throw DomainError("sequence file: malformed header '" + line + "'");
    if (domain != DomainName<T>::value)
        throw DomainError("sequence file: domain '" + domain + "' where '" + DomainName<T>::value + "' expected");
    SequenceTable<T> t{name, {}};
    t.values.reserve(static_cast<std::size_t>(n) + 1);
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        t.values.push_back(parse_value(line, static_cast<T*>(nullptr)));
    }
    if (t.values.size() != static_cast<std::size_t>(n) + 1)
        throw DomainError("sequence file: expected " + std::to_string(n + 1) + " values, found " +
                          std::to_string(t.values.size()));
    return t;
}

template void write_sequence(std::ostream&, const SequenceTable<BigInt>&);
template void write_sequence(std::ostream&, const SequenceTable<BigRational>&);
template void write_sequence(std::ostream&, const SequenceTable<GaussianRational>&);
template SequenceTable<BigInt> read_sequence(std::istream&);
template SequenceTable<BigRational> read_sequence(std::istream&);
template SequenceTable<GaussianRational> read_sequence(std::istream&);

} // namespace takeuchi
