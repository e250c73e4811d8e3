#pragma once

// Exact integer and rational arithmetic, generalized binomial and
// multinomial coefficients.
//
// Integer and Rational are GMP values. Rationals are kept in canonical form
// (positive denominator, gcd 1) by every constructor exposed here.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace lacuna {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Lossless conversion; throws std::domain_error if the denominator is not 1.
Integer to_integer(const Rational& q);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Decimal interchange forms. Rationals print as "num/den", or "num" when
// den == 1.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

/// Coefficient of x^k in (1+x)^n for any signed n; zero when k < 0.
///
/// Computed as the falling factorial n(n-1)...(n-k+1) with an exact division
/// by i after the i-th factor, so intermediates never exceed k times the
/// result. For n >= 0 the symmetric index min(k, n-k) is used.
Integer binom(const Integer& n, const Integer& k);
Integer binom(std::int64_t n, std::int64_t k);

/// total! / prod(parts_i!). Throws std::invalid_argument when a part is
/// negative, total is negative, or the parts do not sum to total.
Integer multinomial(std::int64_t total, std::span<const std::int64_t> parts);

Integer factorial(std::int64_t n);
Integer pow(const Integer& base, std::uint64_t exponent);
Rational pow(const Rational& base, std::int64_t exponent);

/// (-1)^e for any signed e.
inline int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// Floor division and the matching nonnegative residue (for positive d).
std::int64_t floor_div(std::int64_t a, std::int64_t d);
std::int64_t floor_mod(std::int64_t a, std::int64_t d);
Integer floor_mod(const Integer& a, const Integer& d);

/// "a == b (mod modulus)" as modulus | (a - b). A modulus of 1 is vacuously
/// true; a modulus of 0 means exact equality.
bool congruent(const Integer& a, const Integer& b, const Integer& modulus);

/// Trial-division primality test.
bool is_prime(std::int64_t n);

/// Narrowing with a range check; throws std::out_of_range.
std::int64_t to_int64(const Integer& z);

}  // namespace lacuna
