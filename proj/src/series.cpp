#include "lacuna/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lacuna {

TruncSeries::TruncSeries(std::int64_t order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncSeries::TruncSeries(std::int64_t order, std::vector<Rational> coeffs)
    : TruncSeries(order) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coeffs[i]);
}

TruncSeries TruncSeries::constant(std::int64_t order, const Rational& c) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::monomial(std::int64_t order, std::int64_t degree, const Rational& c) {
  TruncSeries s(order);
  if (degree >= 0 && degree <= order) s.coeffs_[degree] = c;
  return s;
}

Rational TruncSeries::coeff(std::int64_t degree) const {
  if (degree < 0 || degree > order()) return 0;
  return coeffs_[degree];
}

TruncSeries TruncSeries::with_order(std::int64_t order) const { return {order, coeffs_}; }

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::int64_t order = std::min(a.order(), b.order());
  TruncSeries out(order);
  for (std::int64_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::int64_t j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncSeries TruncSeries::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term is not a unit");
  TruncSeries out(order());
  out.coeffs_[0] = 1 / coeffs_[0];
  for (std::int64_t n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (std::int64_t k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
    out.coeffs_[n] = -acc * out.coeffs_[0];
  }
  return out;
}

TruncSeries TruncSeries::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  TruncSeries result = constant(order(), 1);
  TruncSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TruncSeries TruncSeries::derivative() const {
  TruncSeries out(std::max<std::int64_t>(order() - 1, 0));
  for (std::int64_t n = 1; n <= order(); ++n) out.coeffs_[n - 1] = coeffs_[n] * n;
  return out;
}

TruncSeries TruncSeries::shift_down() const {
  if (coeffs_[0] != 0) throw std::domain_error("division by t needs a zero constant term");
  TruncSeries out(std::max<std::int64_t>(order() - 1, 0));
  for (std::int64_t n = 1; n <= order(); ++n) out.coeffs_[n - 1] = coeffs_[n];
  return out;
}

TruncSeries log_recip(std::int64_t order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (std::int64_t n = 1; n <= order; ++n) c[n] = make_rational(1, n);
  return {order, std::move(c)};
}

TruncSeries exp_m1(std::int64_t order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  Integer fact = 1;
  for (std::int64_t n = 1; n <= order; ++n) {
    fact *= n;
    c[n] = make_rational(1, fact);
  }
  return {order, std::move(c)};
}

bool egf_stirling_check(StirlingKind kind, std::int64_t k, std::int64_t order) {
  if (k < 0 || order < k) throw std::invalid_argument("egf_stirling_check: need 0 <= k <= N");
  const TruncSeries f = kind == StirlingKind::cycle ? log_recip(order) : exp_m1(order);
  const TruncSeries egf = f.pow(k) * make_rational(1, factorial(k));
  for (std::int64_t n = 0; n <= order; ++n) {
    const Rational scaled = egf.coeff(n) * Rational(factorial(n));
    const Integer expected = kind == StirlingKind::cycle ? stirling1(n, k) : stirling2(n, k);
    if (scaled != expected) return false;
  }
  return true;
}

bool ce_lemma_check(const TruncSeries& f, std::int64_t alpha, std::int64_t n) {
  if (alpha < 1) throw std::invalid_argument("ce_lemma_check: alpha must be >= 1");
  if (n < 1 || f.order() < n) throw std::invalid_argument("ce_lemma_check: need 1 <= n <= order");
  const Rational lhs = f.pow(alpha).coeff(n) / alpha;
  const TruncSeries rhs_series = f.pow(alpha - 1).with_order(f.order() - 1) * f.derivative();
  const Rational rhs = rhs_series.coeff(n - 1) / n;
  return lhs == rhs;
}

Rational adelberg_gf_coeff(std::int64_t y0, std::int64_t m0, std::int64_t u,
                           std::optional<std::int64_t> x0) {
  if (y0 < 1) throw std::invalid_argument("adelberg_gf_coeff: y0 must be >= 1");
  if (m0 < 0 || u < 0) throw std::invalid_argument("adelberg_gf_coeff: m0 and u must be >= 0");
  // One extra degree survives the division by z.
  const std::int64_t order = u + 1;
  const TruncSeries one_plus_z(order, {Rational(1), Rational(1)});
  TruncSeries power = TruncSeries::constant(order, 1);
  for (std::int64_t i = 0; i < y0; ++i) power = power * one_plus_z;
  power -= TruncSeries::constant(order, 1);
  TruncSeries base = power.shift_down() * make_rational(1, y0);
  TruncSeries gf = base.pow(m0);
  if (x0) {
    const TruncSeries unit(u, {Rational(1), Rational(1)});
    gf = gf * unit.pow(*x0);
  }
  return gf.coeff(u);
}

}  // namespace lacuna
