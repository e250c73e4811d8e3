#include "lacuna/stirling.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace lacuna {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

const StirlingTable& cycle_table() {
  static const StirlingTable table(StirlingKind::cycle);
  return table;
}

const StirlingTable& partition_table() {
  static const StirlingTable table(StirlingKind::partition);
  return table;
}

std::int64_t residue(const Integer& value, std::int64_t p) {
  return floor_mod(value, Integer(static_cast<long>(p))).get_si();
}

}  // namespace

StirlingTable::StirlingTable(StirlingKind kind) : kind_(kind) {
  rows_.push_back({Integer(1)});
}

std::int64_t StirlingTable::rows_built() const {
  std::shared_lock lock(mutex_);
  return static_cast<std::int64_t>(rows_.size());
}

void StirlingTable::grow_to(std::int64_t n) const {
  std::unique_lock lock(mutex_);
  while (static_cast<std::int64_t>(rows_.size()) <= n) {
    const auto m = static_cast<std::int64_t>(rows_.size());  // row being built
    const auto& prev = rows_.back();
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1);
    for (std::int64_t k = 0; k <= m; ++k) {
      const Integer same = k < m ? prev[k] : Integer(0);
      const Integer lower = k > 0 ? prev[k - 1] : Integer(0);
      const long weight = kind_ == StirlingKind::cycle ? m - 1 : k;
      next[k] = weight * same + lower;
    }
    rows_.push_back(std::move(next));
  }
}

Integer StirlingTable::entry(std::int64_t n, std::int64_t k) const {
  if (n < 0) throw std::domain_error("Stirling number with negative n");
  if (k < 0 || k > n) return 0;
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<std::int64_t>(rows_.size())) return rows_[n][k];
  }
  grow_to(n);
  std::shared_lock lock(mutex_);
  return rows_[n][k];
}

std::vector<Integer> StirlingTable::row(std::int64_t n) const {
  if (n < 0) throw std::domain_error("Stirling row with negative n");
  entry(n, 0);
  std::shared_lock lock(mutex_);
  return rows_[n];
}

Integer stirling1(std::int64_t n, std::int64_t k) { return cycle_table().entry(n, k); }

Integer stirling2(std::int64_t n, std::int64_t k) { return partition_table().entry(n, k); }

Integer stirling2_explicit(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("Stirling number with negative n");
  if (k < 0) return 0;
  Integer sum = 0;
  for (std::int64_t j = 0; j <= k; ++j) {
    const Integer term = binom(k, j) * pow(Integer(static_cast<long>(j)), static_cast<std::uint64_t>(n));
    if (j % 2 == 0) sum += term; else sum -= term;
  }
  if (k % 2 != 0) sum = -sum;
  Integer result;
  const Integer fact = factorial(k);
  mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), fact.get_mpz_t());
  return result;
}

EuclideanSplit EuclideanSplit::make(std::int64_t n, std::int64_t k, std::int64_t p) {
  EuclideanSplit split{n, k, p, n / p, n % p, 0, 0};
  split.rho = floor_mod(k - split.q, p - 1);
  split.j = split.rho;
  if (split.rho == 0 && split.r == p - 1) split.j = p - 1;
  return split;
}

std::int64_t stirling1_mod_p(std::int64_t n, std::int64_t k, std::int64_t p) {
  require_prime(p);
  if (k < 0 || k > n) throw std::invalid_argument("stirling1_mod_p: k outside [0, n]");
  const auto split = EuclideanSplit::make(n, k, p);
  // j = k - q (mod p-1) by construction, so the division below is exact.
  const std::int64_t offset = k - split.q - split.j;
  if (offset < 0) return 0;
  const std::int64_t t = offset / (p - 1);
  if (t > split.q) return 0;
  const Integer cycles = stirling1(split.r, split.j);
  if (cycles == 0) return 0;
  Integer value = cycles * binom(split.q, t);
  if ((split.q - t) % 2 != 0) value = -value;
  return residue(value, p);
}

std::int64_t stirling2_col_mod_p(std::int64_t n, std::int64_t p) {
  require_prime(p);
  if (n <= 0) throw std::invalid_argument("stirling2_col_mod_p: n must be positive");
  const std::int64_t value = residue(stirling2(n, p - 1), p);
  const std::int64_t indicator = n % (p - 1) == 0 ? 1 : 0;
  if (value != indicator)
    throw std::logic_error("second-kind column congruence failed at n=" + std::to_string(n) +
                           ", p=" + std::to_string(p));
  return value;
}

std::int64_t lacunary_stirling_mod(std::int64_t m, std::int64_t s, std::int64_t i,
                                   std::int64_t p) {
  require_prime(p);
  if (m < 0 || s < 0 || i < 0)
    throw std::invalid_argument("lacunary_stirling_mod: arguments must be nonnegative");
  const std::int64_t n = m * p + s;
  const std::int64_t k = m + s + i * (p - 1);
  const std::int64_t lhs = k <= n ? stirling1_mod_p(n, k, p) : 0;
  const std::int64_t carry = s / p;
  Integer rhs = binom(m + carry, i + carry);
  if ((m - i) % 2 != 0) rhs = -rhs;
  if (lhs != residue(rhs, p))
    throw std::logic_error("lacunary Stirling congruence failed at m=" + std::to_string(m) +
                           ", s=" + std::to_string(s) + ", i=" + std::to_string(i) +
                           ", p=" + std::to_string(p));
  return lhs;
}

bool identity_628_check(std::int64_t l, std::int64_t m, std::int64_t n) {
  if (l < 0 || m < 0 || n < 0)
    throw std::invalid_argument("identity_628_check: arguments must be nonnegative");
  const Integer lhs = binom(l + m, l) * stirling2(n, l + m);
  Integer rhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) rhs += stirling2(k, l) * stirling2(n - k, m) * binom(n, k);
  return lhs == rhs;
}

}  // namespace lacuna
