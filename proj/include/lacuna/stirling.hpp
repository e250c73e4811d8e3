#pragma once

// Stirling numbers of both kinds, the prime-modulus reduction of the cycle
// numbers, and the second-kind column congruence.

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <vector>

#include "lacuna/exactnum.hpp"

namespace lacuna {

enum class StirlingKind { cycle, partition };

/// Triangular table of Stirling numbers, grown on demand.
///
/// Row n holds entries k = 0..n. Lookups outside the triangle return 0.
/// Safe for concurrent use: readers share a lock, growth takes it exclusively.
class StirlingTable {
 public:
  explicit StirlingTable(StirlingKind kind);

  StirlingKind kind() const { return kind_; }
  Integer entry(std::int64_t n, std::int64_t k) const;
  std::vector<Integer> row(std::int64_t n) const;
  std::int64_t rows_built() const;

 private:
  void grow_to(std::int64_t n) const;

  StirlingKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<Integer>> rows_;
};

/// Unsigned cycle Stirling number [n, k]. Throws std::domain_error if n < 0.
Integer stirling1(std::int64_t n, std::int64_t k);
/// Partition Stirling number {n, k}. Throws std::domain_error if n < 0.
Integer stirling2(std::int64_t n, std::int64_t k);

/// Direct evaluation of the alternating sum (-1)^k/k! sum_j (-1)^j C(k,j) j^n.
Integer stirling2_explicit(std::int64_t n, std::int64_t k);

/// Euclidean data for reducing [n, k] modulo a prime p.
struct EuclideanSplit {
  std::int64_t n;
  std::int64_t k;
  std::int64_t p;
  std::int64_t q;    // n / p
  std::int64_t r;    // n mod p
  std::int64_t rho;  // (k - q) mod (p - 1), in [0, p-1)
  std::int64_t j;    // rho, or p-1 when rho = 0 and r = p-1

  static EuclideanSplit make(std::int64_t n, std::int64_t k, std::int64_t p);
};

/// [n, k] mod p in [0, p) from the closed form
/// (-1)^(q - t) [r, j] C(q, t) with t = (k - q - j)/(p - 1).
/// Throws std::invalid_argument for composite p or k outside [0, n].
std::int64_t stirling1_mod_p(std::int64_t n, std::int64_t k, std::int64_t p);

/// {n, p-1} mod p, which is 1 when (p-1) | n and 0 otherwise.
/// Throws std::invalid_argument for composite p or n <= 0, and
/// std::logic_error if the computed residue disagrees with the divisibility
/// indicator.
std::int64_t stirling2_col_mod_p(std::int64_t n, std::int64_t p);

/// [mp + s, m + s + i(p-1)] mod p, cross-checked against
/// (-1)^(m-i) C(m + floor(s/p), i + floor(s/p)) mod p.
/// Throws std::logic_error if the two disagree.
std::int64_t lacunary_stirling_mod(std::int64_t m, std::int64_t s, std::int64_t i,
                                   std::int64_t p);

/// C(l+m, l) {n, l+m} == sum_k {k, l} {n-k, m} C(n, k), for l, m, n >= 0.
bool identity_628_check(std::int64_t l, std::int64_t m, std::int64_t n);

}  // namespace lacuna
