#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace takeuchi {

using BigInt = mpz_class;
/// Always kept in canonical form: gcd(|num|, den) = 1 and den > 0.
using BigRational = mpq_class;

/// Canonicalized num/den. Throws DomainError when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q" or "p" (optional sign, decimal digits).
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }
inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }
inline bool is_unit(const BigRational& q) { return sgn(q) != 0; }
inline BigRational inverse(const BigRational& q) { return BigRational(1) / q; }

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

} // namespace takeuchi
