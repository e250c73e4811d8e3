#pragma once

// Truncated formal power series over the rationals.

#include <cstdint>
#include <optional>
#include <vector>

#include "lacuna/exactnum.hpp"
#include "lacuna/stirling.hpp"

namespace lacuna {

/// Dense series c_0 + c_1 t + ... + c_N t^N; everything above degree N is
/// discarded by every operation.
class TruncSeries {
 public:
  /// The zero series of order N.
  explicit TruncSeries(std::int64_t order);
  /// Coefficients beyond the order are dropped, missing ones are zero.
  TruncSeries(std::int64_t order, std::vector<Rational> coeffs);

  static TruncSeries constant(std::int64_t order, const Rational& c);
  static TruncSeries monomial(std::int64_t order, std::int64_t degree,
                              const Rational& c = Rational(1));

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Zero for degrees outside [0, order].
  Rational coeff(std::int64_t degree) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same coefficients at another order (padding with zeros or truncating).
  TruncSeries with_order(std::int64_t order) const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const Rational& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  /// Result order is the smaller of the two orders.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

  /// Integer power. Negative exponents require a nonzero constant term.
  TruncSeries pow(std::int64_t exponent) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  TruncSeries inverse() const;
  /// Formal derivative; the order drops by one (order 0 stays order 0).
  TruncSeries derivative() const;
  /// Division by t; requires a zero constant term. The order drops by one.
  TruncSeries shift_down() const;

 private:
  std::vector<Rational> coeffs_;
};

/// sum_{n=1..N} t^n / n, the expansion of log(1/(1-t)).
TruncSeries log_recip(std::int64_t order);

/// sum_{n=1..N} t^n / n!, the expansion of e^t - 1.
TruncSeries exp_m1(std::int64_t order);

/// n! [t^n] f^k / k! equals the Stirling number of the given kind for every
/// n <= N, with f = log_recip (cycle) or exp_m1 (partition).
bool egf_stirling_check(StirlingKind kind, std::int64_t k, std::int64_t order);

/// [t^n] f^alpha / alpha == [t^(n-1)] f^(alpha-1) f' / n.
/// Throws std::invalid_argument when alpha < 1, n < 1 or f.order() < n.
bool ce_lemma_check(const TruncSeries& f, std::int64_t alpha, std::int64_t n);

/// [z^u] (1+z)^x0 (((1+z)^y0 - 1) / (y0 z))^m0, with the (1+z)^x0 factor
/// only when x0 is supplied. Throws std::invalid_argument unless y0 >= 1,
/// m0 >= 0 and u >= 0.
Rational adelberg_gf_coeff(std::int64_t y0, std::int64_t m0, std::int64_t u,
                           std::optional<std::int64_t> x0 = std::nullopt);

}  // namespace lacuna
