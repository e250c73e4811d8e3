#pragma once

// Verifiers, with explicit quotients, for lacunary binomial-sum congruences,
// the first/second-kind Stirling identity and its congruence, and the
// classical Glaisher/Fleck/Wan/Sun-Tauraso congruences.
//
// Every sum written over an unbounded index is evaluated over its finite
// support; each function states the bound it uses.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lacuna/exactnum.hpp"

namespace lacuna {

/// Parameters for the three lacunary congruences.
struct CongruenceParams {
  std::int64_t p;
  std::int64_t m;
  std::int64_t l;
  std::int64_t s;
};

/// Parameters for the classical congruences.
struct ClassicalParams {
  std::int64_t p;
  std::int64_t s;
  std::int64_t h;
  std::int64_t l;
  std::int64_t q;
};

/// One verification record.
///
/// The claim is "lhs_sum == target (mod modulus)". A modulus of 0 marks an
/// exact identity (lhs_sum == target). When present, quotient is
/// (lhs_sum - target) / modulus, and holds implies it is an integer. A
/// predicted_quotient is a closed form for the quotient; holds also requires
/// the two to agree.
struct CongruenceReport {
  std::string congruence;
  std::vector<std::pair<std::string, std::int64_t>> params;
  Integer lhs_sum;
  Integer target{0};
  Integer modulus{1};
  bool holds = false;
  std::optional<Rational> quotient;
  std::optional<Rational> predicted_quotient;
};

/// (-1)^(p-1) C(n-1, p-1) [n-p+1, k]
///   == sum_{i=0..n-k} (-1)^i C(k-1+i, i) {i, p-1} [n, i+k].
/// p >= 1 need not be prime. Throws std::invalid_argument when n < p-1.
bool identity33_check(std::int64_t p, std::int64_t n, std::int64_t k);
CongruenceReport identity33_report(std::int64_t p, std::int64_t n, std::int64_t k);

/// sum_{0 < i <= n-k, (p-1) | i} C(k-1+i, k-1) [n, i+k] == [p | n] [n-p+1, k] (mod p).
CongruenceReport cor34_report(std::int64_t p, std::int64_t n, std::int64_t k);
bool cor34_check(std::int64_t p, std::int64_t n, std::int64_t k);

/// sum_{i=l+1..m} (-1)^(m-i) C(m+c, i+c) C(m+s-1+i(p-1), m+s-1+l(p-1))
///   == [p | s] (-1)^(m-1-l) C(m-1+s/p, l+s/p) (mod p), with c = floor(s/p).
/// Also requires the s = 0 and 0 < s < p specializations to hold.
/// Throws std::invalid_argument unless p is prime, m > l >= 0 and s >= 0.
CongruenceReport cong1_report(const CongruenceParams& params);

/// sum_{i=l+1..m} (-1)^i C(m,i) C(m-1+i(p-1), m-1+l(p-1)) + (-1)^l C(m-1,l).
Integer cong1_s0_sum(std::int64_t p, std::int64_t m, std::int64_t l);
/// sum_{i=l+1..m} (-1)^(m-i) C(m,i) C(m+s-1+i(p-1), m+s-1+l(p-1)).
Integer cong1_plain_sum(std::int64_t p, std::int64_t m, std::int64_t l, std::int64_t s);

/// sum_{i=l+1..n-r} (-1)^i C(n-r, i) C(n-1+i(p-1), n-1+l(p-1)) == 0 (mod p),
/// r = n mod p. Throws std::invalid_argument when p | n.
CongruenceReport cong1_n_report(std::int64_t p, std::int64_t n, std::int64_t l);

/// sum_{i=0..m} (-1)^(m-i) C(m, i) C(l + ip, m+s-1) == 0 (mod p^m), with
/// quotient A_{s-1}(l, p, m).
CongruenceReport cong2_report(const CongruenceParams& params);

/// The same sum read as an identity for any n >= 1:
/// returns (lhs, n^m A_{s-1}(l, n, m)). Requires s >= 1.
std::pair<Rational, Rational> cong2_identity(std::int64_t n, std::int64_t m, std::int64_t l,
                                             std::int64_t s);

/// sum_{l<=i<=j<=m} (-1)^(j-i) C(m,j) C(j,i) C(j+s-1+i(p-1), j+s-1+l(p-1))
///   == p^m A_{l(p-1)+s-1}(s-1, p, m), divisible by p^(m-l).
CongruenceReport cong3_report(const CongruenceParams& params);

/// sum_{i=l..m} (-1)^(m-i) C(m,i) C(m+s-1+i(p-1), m+s-1+l(p-1)).
Integer s_seq(std::int64_t p, std::int64_t s, std::int64_t l, std::int64_t m);

/// The binomial transform of s_seq is p^m A_{l(p-1)+s-1}(s-1, p, m), and
/// binomial inversion recovers s_seq, for every m <= m_max.
bool s_seq_transform_check(std::int64_t p, std::int64_t s, std::int64_t l, std::int64_t m_max);

enum class ClassicalKind { glaisher, fleck, wan, suntauraso };

/// Evaluates the classical lacunary sum exactly and checks it against its
/// modulus (p for Glaisher, p^q otherwise).
CongruenceReport classical_check(ClassicalKind kind, const ClassicalParams& params);

enum class RewriteForm { fleck_like, adelberg_like };

/// fleck_like:    sum_{k = r mod p} (-1)^((k-r)/p) C(l(p-1), (k-r)/p) C(k, m)
///                  == 0 (mod p^(l(p-1))), needs m < (p-1)(l+1).
/// adelberg_like: sum_{k = r mod p} (-1)^(k-r) C((k-r)/p, l) C(m, k)
///                  == 0 (mod p^floor((m-pl-1)/(p-1))), needs r < p; the
///                  modulus is 1 when the exponent is not positive.
CongruenceReport lacunary_rewrite_check(RewriteForm form, std::int64_t p, std::int64_t m,
                                        std::int64_t l, std::int64_t r);

/// sum_i (-1)^(m-i) C(m,i) C(l+in, m+2) against
/// n^m (5m + 3m^2 - 12l - 12ml + 12l^2 - 6mn - 6m^2n + 12mln + mn^2 + 3m^2n^2)/24.
std::pair<Integer, Rational> example_identity_first(std::int64_t n, std::int64_t l,
                                                    std::int64_t m);

/// sum_{i,j} (-1)^(j-i) C(m,j) C(j,i) C(j+5+6i, j+5) against
/// 7^m (m+1)(81m^4 + 684m^3 + 1401m^2 + 434m + 40)/40.
std::pair<Integer, Rational> example_identity_second(std::int64_t m);

}  // namespace lacuna
