#pragma once

#include "takeuchi/gaussian_rational.hpp"
#include "takeuchi/polynomial.hpp"
#include "takeuchi/rational.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <iosfwd>
#include <string>
#include <vector>

namespace takeuchi {

template <class T>
struct DomainName;
template <>
struct DomainName<BigInt> {
    static constexpr const char* value = "integer";
};
template <>
struct DomainName<BigRational> {
    static constexpr const char* value = "rational";
};
template <>
struct DomainName<GaussianRational> {
    static constexpr const char* value = "gaussian";
};

/// Exact values a_0..a_N of a named sequence; values[i] is a_i.
template <class T>
struct SequenceTable {
    std::string name;
    std::vector<T> values;

    std::string domain() const { return DomainName<T>::value; }
    /// N, the largest index held.
    std::size_t max_index() const { return values.size() - 1; }
    const T& operator[](std::size_t i) const { return values.at(i); }
};

using IntegerTable = SequenceTable<BigInt>;

/// a_n = Σ_{k=1}^n c_{n,k} a_{n−k} + b_n for n ≥ 1, with a_0 given.
template <class T>
struct RecurrenceSpec {
    std::string name;
    std::function<T(long n, long k)> coefficient;
    std::function<T(long n)> inhomogeneous;
    T initial;
};

/// T_0..T_N from Knuth's recurrence for T_{n+1}, using ballot numbers
/// binom(n+k,n) − binom(n+k,n+1) built incrementally along k.
IntegerTable takeuchi_numbers(std::size_t n_max);
/// B_0..B_N from B_{n+1} = Σ binom(n,k) B_{n−k}.
IntegerTable bell_numbers(std::size_t n_max);
IntegerTable catalan_numbers(std::size_t n_max);
/// b_n = Σ_{k=1}^n C_k with b_0 = 0.
IntegerTable catalan_partial_sums(std::size_t n_max);

/// A_{n+1} = Σ_{k=0}^n binom(n+λk, k) A_{n−k}, A_0 = 1, exact in the domain of λ.
SequenceTable<BigRational> family_numbers(std::size_t n_max, const BigRational& lambda);
SequenceTable<GaussianRational> family_numbers(std::size_t n_max, const GaussianRational& lambda);

template <class T>
SequenceTable<T> run_general_recurrence(const RecurrenceSpec<T>& spec, std::size_t n_max)
{
    using takeuchi::is_zero;
    SequenceTable<T> out{spec.name, {}};
    out.values.reserve(n_max + 1);
    out.values.push_back(spec.initial);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const long ln = static_cast<long>(n);
        T acc = spec.inhomogeneous(ln);
        for (long k = 1; k <= ln; ++k) {
            const T& prev = out.values[n - static_cast<std::size_t>(k)];
            if (is_zero(prev)) continue;
            acc += spec.coefficient(ln, k) * prev;
        }
        out.values.push_back(std::move(acc));
    }
    return out;
}

/// c_{n,k} = binom(n+k−2, n−1) − binom(n+k−2, n), b_n = Σ_{k≤n} C_k, a_0 = 0.
template <class T>
RecurrenceSpec<T> takeuchi_spec()
{
    struct PartialSums {
        std::mutex lock;
        IntegerTable table = catalan_partial_sums(16);
    };
    auto partial = std::make_shared<PartialSums>();
    return {"takeuchi",
            [](long n, long k) {
                const auto top = static_cast<unsigned long>(n + k - 2);
                BigInt c = binomial(top, static_cast<unsigned long>(n - 1)) - binomial(top, static_cast<unsigned long>(n));
                return T(BigRational(c));
            },
            [partial](long n) {
                const auto idx = static_cast<std::size_t>(n);
                std::lock_guard guard(partial->lock);
                if (idx > partial->table.max_index())
                    partial->table = catalan_partial_sums(std::max(idx, 2 * partial->table.max_index()));
                return T(BigRational(partial->table[idx]));
            },
            T(BigRational(0))};
}

/// c_{n,k} = binom(n−1, k−1), no inhomogeneous term, a_0 = 1.
template <class T>
RecurrenceSpec<T> bell_spec()
{
    return {"bell",
            [](long n, long k) {
                return T(BigRational(binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k - 1))));
            },
            [](long) { return T(BigRational(0)); },
            T(BigRational(1))};
}

template <class T>
RecurrenceSpec<T> zero_spec()
{
    return {"zero", [](long, long) { return T(BigRational(0)); }, [](long) { return T(BigRational(0)); },
            T(BigRational(0))};
}

/// The λ-family in shifted form: c_{n,k} = binom(n−1+λ(k−1), k−1), a_0 = 1, b = 0.
template <class T>
RecurrenceSpec<T> family_spec(const T& lambda)
{
    return {"family",
            [lambda](long n, long k) {
                T alpha = T(BigRational(n - 1)) + lambda * T(BigRational(k - 1));
                return binomial_general(alpha, static_cast<unsigned long>(k - 1));
            },
            [](long) { return T(BigRational(0)); },
            T(BigRational(1))};
}

/// "# <name> <N> <domain>" then one exact value per line.
template <class T>
void write_sequence(std::ostream& out, const SequenceTable<T>& table);
/// Parses the sequence file format. Lines starting with '#' after the header are
/// comments. Throws DomainError on a malformed header, a domain mismatch, or a
/// value count different from N+1.
template <class T>
SequenceTable<T> read_sequence(std::istream& in);

} // namespace takeuchi
