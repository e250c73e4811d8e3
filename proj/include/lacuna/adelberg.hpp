#pragma once

// Adelberg A/B polynomials in the variables m, x, y.
//
//   B_u(y, m)    = [z^u] (((1+z)^y - 1) / (y z))^m
//   A_u(x, y, m) = sum_j C(x, j) B_{u-j}(y, m)
//
// and, for integer arguments, A_{s-1}(x, y, m) is the m-th divided difference
// with increment y of C(x, m+s-1).

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lacuna/exactnum.hpp"

namespace lacuna {

enum class Var : std::size_t { m = 0, x = 1, y = 2 };

/// Exponents (e_m, e_x, e_y).
using Monomial = std::array<std::uint32_t, 3>;

/// Sparse polynomial in m, x, y with rational coefficients. No zero
/// coefficient is ever stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(std::int64_t c) : MultiPoly(Rational(static_cast<long>(c))) {}  // NOLINT

  static MultiPoly variable(Var v);
  static MultiPoly term(const Rational& c, const Monomial& exponents);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& exponents) const;

  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(std::uint32_t exponent) const;

  /// Replaces every occurrence of v by the given polynomial.
  MultiPoly substitute(Var v, const MultiPoly& replacement) const;
  MultiPoly substitute(Var v, const Rational& value) const;
  Rational evaluate(const Rational& m, const Rational& x, const Rational& y) const;

  /// Canonical form: terms by ascending total degree, then lexicographic on
  /// (e_m, e_x, e_y); "c*m^a*x^b*y^c" with exponent 1 and coefficient 1
  /// elided, negative coefficients folded into the joining sign. "0" for the
  /// zero polynomial.
  std::string to_string() const;

 private:
  void add_term(const Monomial& e, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

/// C(v - shift, j) expanded as a polynomial in v: falling factorial over j!.
MultiPoly binom_poly(Var v, std::int64_t shift, std::int64_t j);

/// Multiplicities t_1..t_u of a partition of u: t[i-1] parts equal to i.
struct PartitionMultiplicity {
  std::vector<std::int64_t> t;

  std::int64_t count(std::int64_t part) const {
    return part >= 1 && part <= static_cast<std::int64_t>(t.size()) ? t[part - 1] : 0;
  }
  std::int64_t total() const;       // sum i * t_i
  std::int64_t num_parts() const;   // sum t_i
  friend bool operator==(const PartitionMultiplicity&, const PartitionMultiplicity&) = default;
};

struct WeakComposition {
  std::vector<std::int64_t> k;
  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
};

/// Indices for the scaled polynomials p^l B_u(p, m) with u = l(p-1) + s - 1.
struct AdelbergIndex {
  std::int64_t p;
  std::int64_t l;
  std::int64_t s;

  /// Throws std::invalid_argument unless p is prime, l >= 0 and 0 < s < p.
  static AdelbergIndex make(std::int64_t p, std::int64_t l, std::int64_t s);
  std::int64_t u() const { return l * (p - 1) + s - 1; }
};

/// Every partition of u exactly once, in decreasing-part order: (u) first,
/// (1, ..., 1) last. u = 0 yields the single empty partition.
std::vector<PartitionMultiplicity> partitions_of(std::int64_t u);

/// All length-m nonnegative vectors summing to u, lexicographically ascending.
std::vector<WeakComposition> weak_compositions(std::int64_t u, std::int64_t m);

/// B_u(y, m) from the sum over partitions of u. Results are memoized.
MultiPoly b_poly(std::int64_t u);
/// A_u(x, y, m) = sum_j C(x, j) B_{u-j}(y, m). Results are memoized.
MultiPoly a_poly(std::int64_t u);

/// B_u(y0, m0) for integers, via the coefficient of z^u in g(z)^m0 where
/// g(z) = sum_j C(y0-1, j)/(j+1) z^j. Valid for negative m0 as well. Used
/// where u is too large for the symbolic form to be practical.
Rational b_value(std::int64_t u, std::int64_t y0, std::int64_t m0);
/// A_u(x0, y0, m0) = sum_j C(x0, j) B_{u-j}(y0, m0), numerically.
Rational a_value(std::int64_t u, std::int64_t x0, std::int64_t y0, std::int64_t m0);

/// (1/y0^m0) sum_k (-1)^(m0-k) C(m0, k) C(x0 + k y0, m0 + u).
/// Negative u is accepted; the sum then vanishes for m0 >= 1.
/// Throws std::invalid_argument for y0 == 0 or m0 < 0.
Rational a_num_divided_difference(std::int64_t u, std::int64_t x0, std::int64_t y0,
                                  std::int64_t m0);

/// B_u(y, m0) from the weak-composition sum, as a polynomial in y.
MultiPoly b_poly_from_compositions(std::int64_t u, std::int64_t m0);

/// sum_j C(m0, j) y0^j A_u(x + j, y0, j) == (y0 + 1)^m0 A_u(x, y0 + 1, m0)
/// as polynomials in x.
bool sym_sxvi_check(std::int64_t u, std::int64_t m0, std::int64_t y0);

/// p^l B_{l(p-1)+s-1}(p, m0) has denominator 1 for every m0 in [m_lo, m_hi].
bool scaled_b_integrality(std::int64_t p, std::int64_t l, std::int64_t s, std::int64_t m_lo,
                          std::int64_t m_hi);

}  // namespace lacuna
