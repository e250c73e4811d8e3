#include "lacuna/congruence.hpp"

#include <algorithm>
#include <stdexcept>

#include "lacuna/adelberg.hpp"
#include "lacuna/stirling.hpp"

namespace lacuna {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_nonnegative(std::int64_t v, const char* name) {
  if (v < 0) throw std::invalid_argument(std::string(name) + " must be nonnegative");
}

Integer ipow(std::int64_t base, std::int64_t exponent) {
  return pow(Integer(static_cast<long>(base)), static_cast<std::uint64_t>(exponent));
}

Integer signed_term(std::int64_t sign_exponent, const Integer& value) {
  return sign_power(sign_exponent) > 0 ? value : Integer(-value);
}

// Fills modulus, quotient and holds from lhs_sum and target.
void settle(CongruenceReport& report, const Integer& modulus) {
  report.modulus = modulus;
  report.holds = congruent(report.lhs_sum, report.target, modulus);
  if (modulus != 0) report.quotient = make_rational(report.lhs_sum - report.target, modulus);
  if (report.holds && report.predicted_quotient && report.quotient)
    report.holds = *report.quotient == *report.predicted_quotient;
}

}  // namespace

// ---------------------------------------------------------------------------
// Stirling identity and its congruence

CongruenceReport identity33_report(std::int64_t p, std::int64_t n, std::int64_t k) {
  if (p < 1) throw std::invalid_argument("identity33: p must be positive");
  require_nonnegative(k, "k");
  if (n < p - 1) throw std::invalid_argument("identity33: need n >= p-1");
  CongruenceReport report{"identity33", {{"p", p}, {"n", n}, {"k", k}}};
  report.lhs_sum = signed_term(p - 1, binom(n - 1, p - 1) * stirling1(n - p + 1, k));
  Integer rhs = 0;
  for (std::int64_t i = 0; i <= n - k; ++i) {
    const Integer partitions = stirling2(i, p - 1);
    if (partitions == 0) continue;
    rhs += signed_term(i, binom(k - 1 + i, i) * partitions * stirling1(n, i + k));
  }
  report.target = rhs;
  settle(report, 0);
  return report;
}

bool identity33_check(std::int64_t p, std::int64_t n, std::int64_t k) {
  return identity33_report(p, n, k).holds;
}

CongruenceReport cor34_report(std::int64_t p, std::int64_t n, std::int64_t k) {
  require_prime(p);
  require_nonnegative(k, "k");
  if (n < p - 1) throw std::invalid_argument("cor34: need n >= p-1");
  CongruenceReport report{"cor34", {{"p", p}, {"n", n}, {"k", k}}};
  Integer lhs = 0;
  for (std::int64_t i = p - 1; i <= n - k; i += p - 1) lhs += binom(k - 1 + i, k - 1) * stirling1(n, i + k);
  report.lhs_sum = lhs;
  report.target = n % p == 0 ? stirling1(n - p + 1, k) : Integer(0);
  settle(report, p);
  return report;
}

bool cor34_check(std::int64_t p, std::int64_t n, std::int64_t k) { return cor34_report(p, n, k).holds; }

// ---------------------------------------------------------------------------
// First congruence

Integer cong1_s0_sum(std::int64_t p, std::int64_t m, std::int64_t l) {
  Integer sum = signed_term(l, binom(m - 1, l));
  for (std::int64_t i = l + 1; i <= m; ++i)
    sum += signed_term(i, binom(m, i) * binom(m - 1 + i * (p - 1), m - 1 + l * (p - 1)));
  return sum;
}

Integer cong1_plain_sum(std::int64_t p, std::int64_t m, std::int64_t l, std::int64_t s) {
  Integer sum = 0;
  for (std::int64_t i = l + 1; i <= m; ++i)
    sum += signed_term(m - i, binom(m, i) * binom(m + s - 1 + i * (p - 1), m + s - 1 + l * (p - 1)));
  return sum;
}

CongruenceReport cong1_report(const CongruenceParams& params) {
  const auto [p, m, l, s] = params;
  require_prime(p);
  require_nonnegative(l, "l");
  require_nonnegative(s, "s");
  if (m <= l) throw std::invalid_argument("cong1: need m > l");
  CongruenceReport report{"cong1", {{"p", p}, {"m", m}, {"l", l}, {"s", s}}};
  const std::int64_t carry = s / p;
  // C(m + carry, i + carry) vanishes for i > m.
  Integer lhs = 0;
  for (std::int64_t i = l + 1; i <= m; ++i)
    lhs += signed_term(m - i, binom(m + carry, i + carry) *
                                  binom(m + s - 1 + i * (p - 1), m + s - 1 + l * (p - 1)));
  report.lhs_sum = lhs;
  if (s % p == 0) report.target = signed_term(m - 1 - l, binom(m - 1 + carry, l + carry));
  settle(report, p);
  if (s == 0) report.holds = report.holds && congruent(cong1_s0_sum(p, m, l), 0, p);
  if (s > 0 && s < p) report.holds = report.holds && congruent(cong1_plain_sum(p, m, l, s), 0, p);
  return report;
}

CongruenceReport cong1_n_report(std::int64_t p, std::int64_t n, std::int64_t l) {
  require_prime(p);
  require_nonnegative(l, "l");
  require_nonnegative(n, "n");
  if (n % p == 0) throw std::invalid_argument("cong1_n: p must not divide n");
  CongruenceReport report{"cong1_n", {{"p", p}, {"n", n}, {"l", l}}};
  const std::int64_t top = n - n % p;
  Integer lhs = 0;
  for (std::int64_t i = l + 1; i <= top; ++i)
    lhs += signed_term(i, binom(top, i) * binom(n - 1 + i * (p - 1), n - 1 + l * (p - 1)));
  report.lhs_sum = lhs;
  settle(report, p);
  return report;
}

// ---------------------------------------------------------------------------
// Second congruence

namespace {

Integer cong2_sum(std::int64_t n, std::int64_t m, std::int64_t l, std::int64_t s) {
  Integer sum = 0;
  for (std::int64_t i = 0; i <= m; ++i) sum += signed_term(m - i, binom(m, i) * binom(l + i * n, m + s - 1));
  return sum;
}

}  // namespace

CongruenceReport cong2_report(const CongruenceParams& params) {
  const auto [p, m, l, s] = params;
  require_prime(p);
  require_nonnegative(m, "m");
  require_nonnegative(l, "l");
  if (s <= 0 || s >= p) throw std::invalid_argument("cong2: need 0 < s < p");
  CongruenceReport report{"cong2", {{"p", p}, {"m", m}, {"l", l}, {"s", s}}};
  report.lhs_sum = cong2_sum(p, m, l, s);
  report.predicted_quotient = a_poly(s - 1).evaluate(Rational(static_cast<long>(m)),
                                                     Rational(static_cast<long>(l)),
                                                     Rational(static_cast<long>(p)));
  settle(report, ipow(p, m));
  return report;
}

std::pair<Rational, Rational> cong2_identity(std::int64_t n, std::int64_t m, std::int64_t l,
                                             std::int64_t s) {
  if (n < 1) throw std::invalid_argument("cong2_identity: n must be positive");
  require_nonnegative(m, "m");
  if (s < 1) throw std::invalid_argument("cong2_identity: s must be positive");
  const Rational lhs(cong2_sum(n, m, l, s));
  const Rational rhs = Rational(ipow(n, m)) *
                       a_poly(s - 1).evaluate(Rational(static_cast<long>(m)),
                                              Rational(static_cast<long>(l)),
                                              Rational(static_cast<long>(n)));
  return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Third congruence

CongruenceReport cong3_report(const CongruenceParams& params) {
  const auto [p, m, l, s] = params;
  require_prime(p);
  require_nonnegative(l, "l");
  if (m < l) throw std::invalid_argument("cong3: need m >= l");
  if (s <= 0 || s >= p) throw std::invalid_argument("cong3: need 0 < s < p");
  CongruenceReport report{"cong3", {{"p", p}, {"m", m}, {"l", l}, {"s", s}}};
  Integer lhs = 0;
  for (std::int64_t j = l; j <= m; ++j) {
    const Integer outer = binom(m, j);
    for (std::int64_t i = l; i <= j; ++i)
      lhs += signed_term(j - i, outer * binom(j, i) *
                                    binom(j + s - 1 + i * (p - 1), j + s - 1 + l * (p - 1)));
  }
  report.lhs_sum = lhs;
  const std::int64_t u = l * (p - 1) + s - 1;
  report.predicted_quotient = Rational(ipow(p, l)) * a_value(u, s - 1, p, m);
  settle(report, ipow(p, m - l));
  return report;
}

Integer s_seq(std::int64_t p, std::int64_t s, std::int64_t l, std::int64_t m) {
  Integer sum = 0;
  for (std::int64_t i = l; i <= m; ++i)
    sum += signed_term(m - i, binom(m, i) * binom(m + s - 1 + i * (p - 1), m + s - 1 + l * (p - 1)));
  return sum;
}

bool s_seq_transform_check(std::int64_t p, std::int64_t s, std::int64_t l, std::int64_t m_max) {
  require_prime(p);
  require_nonnegative(l, "l");
  if (s <= 0 || s >= p) throw std::invalid_argument("s_seq_transform_check: need 0 < s < p");
  const std::int64_t u = l * (p - 1) + s - 1;
  std::vector<Integer> seq;
  std::vector<Rational> scaled;  // p^j A_u(s-1, p, j)
  for (std::int64_t j = 0; j <= m_max; ++j) {
    seq.push_back(s_seq(p, s, l, j));
    scaled.push_back(Rational(ipow(p, j)) * a_value(u, s - 1, p, j));
  }
  for (std::int64_t m = 0; m <= m_max; ++m) {
    Rational forward = 0;
    Rational inverse = 0;
    for (std::int64_t j = 0; j <= m; ++j) {
      const Integer c = binom(m, j);
      forward += Rational(c * seq[j]);
      inverse += Rational(signed_term(m - j, c)) * scaled[j];
    }
    if (forward != scaled[m] || inverse != Rational(seq[m])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Classical congruences

CongruenceReport classical_check(ClassicalKind kind, const ClassicalParams& params) {
  const auto [p, s, h, l, q] = params;
  require_prime(p);
  if (s <= 0 || s >= p) throw std::invalid_argument("classical: need 0 < s < p");
  if (h < 0 || h >= p) throw std::invalid_argument("classical: need 0 <= h < p");
  require_nonnegative(l, "l");
  require_nonnegative(q, "q");
  CongruenceReport report;
  Integer sum = 0;
  switch (kind) {
    case ClassicalKind::glaisher: {
      report.congruence = "glaisher";
      report.params = {{"p", p}, {"s", s}, {"h", h}, {"l", l}};
      const std::int64_t top = s + l * (p - 1);
      for (std::int64_t i = 0; h + i * (p - 1) <= top; ++i) sum += binom(top, h + i * (p - 1));
      report.lhs_sum = sum;
      report.target = binom(s, h);
      settle(report, p);
      return report;
    }
    case ClassicalKind::fleck: {
      report.congruence = "fleck";
      report.params = {{"p", p}, {"s", s}, {"h", h}, {"q", q}};
      const std::int64_t top = s + q * (p - 1);
      for (std::int64_t i = 0; h + i * p <= top; ++i) sum += signed_term(i * p, binom(top, h + i * p));
      break;
    }
    case ClassicalKind::wan: {
      report.congruence = "wan";
      report.params = {{"p", p}, {"s", s}, {"h", h}, {"l", l}, {"q", q}};
      const std::int64_t top = l * p + s + q * (p - 1);
      for (std::int64_t i = l; h + i * p <= top; ++i)
        sum += signed_term(i * p, binom(i, l) * binom(top, h + i * p));
      break;
    }
    case ClassicalKind::suntauraso: {
      report.congruence = "suntauraso";
      report.params = {{"p", p}, {"s", s}, {"h", h}, {"q", q}};
      for (std::int64_t j = 0; j <= q; ++j) {
        const std::int64_t top = h + j * (p - 1);
        for (std::int64_t i = 0; s + i * (p - 1) <= top; ++i)
          sum += signed_term(j + i * (p - 1), binom(q, j) * binom(top, s + i * (p - 1)));
      }
      break;
    }
  }
  report.lhs_sum = sum;
  settle(report, ipow(p, q));
  return report;
}

CongruenceReport lacunary_rewrite_check(RewriteForm form, std::int64_t p, std::int64_t m,
                                        std::int64_t l, std::int64_t r) {
  require_prime(p);
  require_nonnegative(m, "m");
  require_nonnegative(l, "l");
  require_nonnegative(r, "r");
  CongruenceReport report;
  report.params = {{"p", p}, {"m", m}, {"l", l}, {"r", r}};
  Integer sum = 0;
  if (form == RewriteForm::fleck_like) {
    if (m >= (p - 1) * (l + 1)) throw std::invalid_argument("rewrite 1: need m < (p-1)(l+1)");
    report.congruence = "rewrite1";
    // k = r + tp; C(l(p-1), t) vanishes outside 0 <= t <= l(p-1).
    const std::int64_t width = l * (p - 1);
    for (std::int64_t t = 0; t <= width; ++t) sum += signed_term(t, binom(width, t) * binom(r + t * p, m));
    report.lhs_sum = sum;
    settle(report, ipow(p, width));
    return report;
  }
  if (r >= p) throw std::invalid_argument("rewrite 2: need r < p");
  report.congruence = "rewrite2";
  // k = r + tp; C(m, k) vanishes for k > m.
  for (std::int64_t k = r; k <= m; k += p) sum += signed_term(k - r, binom((k - r) / p, l) * binom(m, k));
  report.lhs_sum = sum;
  const std::int64_t exponent = floor_div(m - p * l - 1, p - 1);
  settle(report, ipow(p, std::max<std::int64_t>(exponent, 0)));
  return report;
}

// ---------------------------------------------------------------------------
// Worked identities

std::pair<Integer, Rational> example_identity_first(std::int64_t n, std::int64_t l,
                                                    std::int64_t m) {
  const Integer lhs = cong2_sum(n, m, l, 3);
  const Integer poly = 5 * m + 3 * m * m - 12 * l - 12 * m * l + 12 * l * l - 6 * m * n -
                       6 * m * m * n + 12 * m * l * n + m * n * n + 3 * m * m * n * n;
  return {lhs, make_rational(ipow(n, m) * poly, 24)};
}

std::pair<Integer, Rational> example_identity_second(std::int64_t m) {
  Integer lhs = 0;
  for (std::int64_t j = 0; j <= m; ++j)
    for (std::int64_t i = 0; i <= j; ++i)
      lhs += signed_term(j - i, binom(m, j) * binom(j, i) * binom(j + 5 + 6 * i, j + 5));
  const Integer mm(static_cast<long>(m));
  const Integer poly = (mm + 1) * (81 * mm * mm * mm * mm + 684 * mm * mm * mm + 1401 * mm * mm + 434 * mm + 40);
  return {lhs, make_rational(ipow(7, m) * poly, 40)};
}

}  // namespace lacuna
