#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "lacuna/stirling.hpp"

using namespace lacuna;

namespace {

// Coefficients of x(x+1)...(x+n-1), expanded by repeated multiplication.
std::vector<Integer> rising_factorial_coeffs(int n) {
  std::vector<Integer> poly{Integer(1)};
  for (int j = 0; j < n; ++j) {
    std::vector<Integer> next(poly.size() + 1, Integer(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += j * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

constexpr std::int64_t kPrimes[] = {2, 3, 5, 7, 11, 13};

}  // namespace

TEST_CASE("stirling1 examples") {
  CHECK(stirling1(0, 0) == 1);
  CHECK(stirling1(4, 2) == 11);
  CHECK(stirling1(3, 5) == 0);
  CHECK(stirling1(7, 3) == 1624);
  CHECK(stirling1(5, -1) == 0);
  CHECK_THROWS_AS(stirling1(-1, 0), std::domain_error);
}

TEST_CASE("stirling2 examples") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(4, -1) == 0);
  CHECK(stirling2(10, 3) == 9330);
  CHECK_THROWS_AS(stirling2(-2, 0), std::domain_error);
}

TEST_CASE("horizontal generating function") {
  for (int n = 0; n <= 20; ++n) {
    const auto coeffs = rising_factorial_coeffs(n);
    for (int k = 0; k <= n; ++k) CHECK(stirling1(n, k) == coeffs[k]);
    CHECK(stirling1(n, n + 1) == 0);
  }
}

TEST_CASE("explicit alternating sum for the second kind") {
  for (int n = 0; n <= 14; ++n)
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_explicit(n, k));
}

TEST_CASE("table rows match entries and cache is transparent") {
  StirlingTable fresh(StirlingKind::partition);
  const auto row = fresh.row(12);
  REQUIRE(row.size() == 13);
  for (int k = 0; k <= 12; ++k) CHECK(row[k] == stirling2(12, k));
  CHECK(fresh.rows_built() == 13);
}

TEST_CASE("concurrent lookups agree with serial values") {
  StirlingTable shared(StirlingKind::cycle);
  std::vector<std::vector<Integer>> seen(4);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        for (int n = 60 - 10 * t; n >= 0; --n) seen[t].push_back(shared.entry(n, n / 2));
      });
    }
  }
  for (int t = 0; t < 4; ++t) {
    int n = 60 - 10 * t;
    for (const auto& value : seen[t]) {
      CHECK(value == stirling1(n, n / 2));
      --n;
    }
  }
}

TEST_CASE("Euclidean split invariants") {
  for (auto p : kPrimes)
    for (std::int64_t n = 0; n <= 60; ++n)
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto s = EuclideanSplit::make(n, k, p);
        CHECK(s.q * p + s.r == n);
        CHECK(s.r >= 0);
        CHECK(s.r < p);
        CHECK(s.rho >= 0);
        CHECK(s.rho < p - 1);
        if (s.rho == 0 && s.r == p - 1) CHECK(s.j == p - 1); else CHECK(s.j == s.rho);
      }
}

TEST_CASE("stirling1_mod_p examples") {
  CHECK(stirling1_mod_p(7, 3, 3) == 1);
  CHECK(stirling1_mod_p(5, 1, 5) == 4);
  for (auto p : kPrimes)
    for (std::int64_t n = 1; n < p; ++n) CHECK(stirling1_mod_p(n, n, p) == 1);
  CHECK_THROWS_AS(stirling1_mod_p(7, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(stirling1_mod_p(7, 8, 3), std::invalid_argument);
  CHECK_THROWS_AS(stirling1_mod_p(7, -1, 3), std::invalid_argument);
}

TEST_CASE("closed-form residue equals the exact value reduced") {
  for (auto p : kPrimes)
    for (std::int64_t n = 0; n <= 80; ++n)
      for (std::int64_t k = 0; k <= n; ++k) {
        const Integer exact = floor_mod(stirling1(n, k), Integer(static_cast<long>(p)));
        CHECK(stirling1_mod_p(n, k, p) == exact.get_si());
      }
}

TEST_CASE("Wilson and the auxiliary congruences") {
  for (std::int64_t p = 2; p <= 23; ++p) {
    if (!is_prime(p)) continue;
    CHECK(floor_mod(factorial(p - 1), Integer(static_cast<long>(p))) == p - 1);
  }
  for (std::int64_t p = 2; p <= 13; ++p) {
    if (!is_prime(p)) continue;
    const Integer mod(static_cast<long>(p));
    for (std::int64_t j = 0; j <= p - 1; ++j)
      CHECK(congruent(binom(p - 1, j), sign_power(j), mod));
    for (std::int64_t k = 1; k <= 3 * (p - 1); ++k) {
      Integer sum = 0;
      for (std::int64_t j = 1; j <= p - 1; ++j) sum += pow(Integer(static_cast<long>(j)), static_cast<std::uint64_t>(k));
      CHECK(congruent(sum, k % (p - 1) == 0 ? -1 : 0, mod));
    }
  }
}

TEST_CASE("second-kind column congruence") {
  CHECK(stirling2_col_mod_p(4, 3) == 1);
  CHECK(stirling2_col_mod_p(3, 3) == 0);
  CHECK(stirling2_col_mod_p(2, 2) == 1);
  for (auto p : kPrimes)
    for (std::int64_t n = 1; n <= 60; ++n)
      CHECK(stirling2_col_mod_p(n, p) == (n % (p - 1) == 0 ? 1 : 0));
  CHECK_THROWS_AS(stirling2_col_mod_p(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(stirling2_col_mod_p(5, 9), std::invalid_argument);
}

TEST_CASE("lacunary Stirling residues") {
  CHECK(lacunary_stirling_mod(1, 1, 0, 3) == 2);
  CHECK(lacunary_stirling_mod(2, 1, 1, 2) == 0);
  for (std::int64_t m = 0; m <= 4; ++m)
    for (std::int64_t s = 0; s <= 4; ++s) CHECK(lacunary_stirling_mod(m, s, m, 5) == 1);
  // The function throws if the binomial form disagrees; sweep it.
  for (auto p : {2, 3, 5, 7})
    for (std::int64_t m = 0; m <= 6; ++m)
      for (std::int64_t s = 0; s <= 2 * p; ++s)
        for (std::int64_t i = 0; i <= m + 1; ++i) CHECK_NOTHROW(lacunary_stirling_mod(m, s, i, p));
  CHECK_THROWS_AS(lacunary_stirling_mod(1, 1, 0, 6), std::invalid_argument);
}

TEST_CASE("three-parameter second-kind identity") {
  CHECK(identity_628_check(1, 1, 2));
  CHECK(identity_628_check(0, 0, 5));
  CHECK(identity_628_check(2, 1, 4));
  for (int l = 0; l <= 6; ++l)
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 14; ++n) CHECK(identity_628_check(l, m, n));
  CHECK_THROWS_AS(identity_628_check(-1, 0, 3), std::invalid_argument);
}
