#include "lacuna/exactnum.hpp"

#include <algorithm>
#include <stdexcept>

namespace lacuna {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer to_integer(const Rational& q) {
  if (q.get_den() != 1)
    throw std::domain_error("rational " + to_string(q) + " is not an integer");
  return q.get_num();
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0)
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return z;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

Integer binom(const Integer& n, const Integer& k) {
  if (k < 0) return 0;
  Integer kk = k;
  if (n >= 0) {
    if (k > n) return 0;
    kk = std::min<Integer>(k, Integer(n - k));
  }
  if (!kk.fits_ulong_p())
    throw std::out_of_range("binomial lower index too large: " + to_string(k));
  const unsigned long steps = kk.get_ui();
  Integer result = 1;
  Integer factor = n;
  for (unsigned long i = 1; i <= steps; ++i) {
    result *= factor;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    --factor;
  }
  return result;
}

Integer binom(std::int64_t n, std::int64_t k) {
  return binom(Integer(static_cast<long>(n)), Integer(static_cast<long>(k)));
}

Integer multinomial(std::int64_t total, std::span<const std::int64_t> parts) {
  if (total < 0) throw std::invalid_argument("multinomial: negative total");
  std::int64_t sum = 0;
  for (auto part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial: negative part");
    sum += part;
  }
  if (sum != total)
    throw std::invalid_argument("multinomial: parts do not sum to total");
  // m!/(t_1!...t_k!) = C(m, t_1) C(m - t_1, t_2) ...
  Integer result = 1;
  std::int64_t remaining = total;
  for (auto part : parts) {
    result *= binom(remaining, part);
    remaining -= part;
  }
  return result;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent >= 0) {
    const auto e = static_cast<std::uint64_t>(exponent);
    Rational result(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
    result.canonicalize();
    return result;
  }
  if (base == 0) throw std::domain_error("zero raised to a negative power");
  return pow(Rational(1) / base, -exponent);
}

std::int64_t floor_div(std::int64_t a, std::int64_t d) {
  std::int64_t q = a / d;
  if ((a % d != 0) && ((a < 0) != (d < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t d) { return a - d * floor_div(a, d); }

Integer floor_mod(const Integer& a, const Integer& d) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

bool congruent(const Integer& a, const Integer& b, const Integer& modulus) {
  const Integer diff = a - b;
  if (modulus == 0) return diff == 0;
  return mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::out_of_range("integer out of range: " + to_string(z));
  return z.get_si();
}

}  // namespace lacuna
