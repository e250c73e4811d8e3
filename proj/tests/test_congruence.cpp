#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "lacuna/adelberg.hpp"
#include "lacuna/congruence.hpp"

using namespace lacuna;

namespace {

constexpr std::int64_t kPrimes[] = {2, 3, 5, 7, 11, 13};

Rational r(std::int64_t v) { return Rational(static_cast<long>(v)); }

// Lagrange interpolation through (xs[i], ys[i]), evaluated at t.
Rational interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& t) {
  Rational total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational basis = 1;
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) basis *= (t - xs[j]) / (xs[i] - xs[j]);
    total += ys[i] * basis;
  }
  return total;
}

// True when the samples fit a polynomial of degree exactly d: the first d+1
// points predict all others, and d points do not.
bool has_degree(const std::vector<Rational>& ys, std::size_t d) {
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < ys.size(); ++i) xs.push_back(r(static_cast<std::int64_t>(i)));
  auto fits = [&](std::size_t n) {
    const std::vector<Rational> bx(xs.begin(), xs.begin() + n), by(ys.begin(), ys.begin() + n);
    for (std::size_t i = n; i < ys.size(); ++i)
      if (interpolate(bx, by, xs[i]) != ys[i]) return false;
    return true;
  };
  return fits(d + 1) && (d == 0 ? ys[0] != 0 : !fits(d));
}

}  // namespace

TEST_CASE("first/second-kind identity") {
  CHECK(identity33_check(2, 3, 1));
  CHECK(identity33_report(2, 3, 1).lhs_sum == -2);
  CHECK(identity33_report(2, 4, 2).lhs_sum == -9);
  CHECK(identity33_report(2, 4, 2).target == -9);
  CHECK(identity33_report(2, 4, 2).modulus == 0);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) CHECK(identity33_check(1, n, k));
  for (int p = 1; p <= 8; ++p)
    for (int n = p - 1; n <= 16; ++n)
      for (int k = 0; k <= n; ++k) CHECK(identity33_check(p, n, k));
  CHECK(identity33_check(6, 9, 2));
  CHECK_THROWS_AS(identity33_check(4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(identity33_check(0, 2, 0), std::invalid_argument);
}

TEST_CASE("first-kind Stirling congruence corollary") {
  CHECK(cor34_report(3, 6, 2).lhs_sum == 260);
  CHECK(cor34_check(3, 6, 2));
  CHECK(cor34_report(3, 4, 1).lhs_sum == 6);
  CHECK(cor34_check(3, 4, 1));
  CHECK(cor34_report(2, 2, 1).lhs_sum == 1);
  CHECK(cor34_check(2, 2, 1));
  for (auto p : {2, 3, 5, 7})
    for (int n = p - 1; n <= 24; ++n)
      for (int k = 0; k <= 8; ++k) CHECK(cor34_check(p, n, k));
  CHECK_THROWS_AS(cor34_check(4, 6, 2), std::invalid_argument);
}

TEST_CASE("first congruence examples") {
  const auto a = cong1_report({3, 2, 0, 1});
  CHECK(a.lhs_sum == 3);
  CHECK(a.modulus == 3);
  CHECK(a.target == 0);
  CHECK(a.holds);
  const auto b = cong1_report({3, 2, 0, 0});
  CHECK(b.lhs_sum == -1);
  CHECK(b.target == -1);
  CHECK(b.holds);
  CHECK(cong1_s0_sum(3, 2, 0) == 0);
  CHECK(cong1_plain_sum(3, 2, 0, 1) == 3);

  const auto c = cong1_n_report(3, 4, 0);
  CHECK(c.lhs_sum == -9);
  CHECK(c.holds);
  // The sum at (2, 3, 0) is -2*6 + 1*6 = 0.
  CHECK(cong1_n_report(2, 3, 0).lhs_sum == 0);
  CHECK(cong1_n_report(2, 3, 0).holds);
  CHECK(cong1_n_report(5, 6, 1).holds);
}

TEST_CASE("first congruence sweep") {
  for (auto p : {2, 3, 5, 7})
    for (int m = 1; m <= 6; ++m)
      for (int l = 0; l < m; ++l)
        for (int s = 0; s <= 2 * p; ++s) {
          const auto rep = cong1_report({p, m, l, s});
          CHECK(rep.holds);
          CHECK(rep.quotient.has_value());
          CHECK(rep.quotient->get_den() == 1);
        }
  for (auto p : kPrimes)
    for (int n = 1; n <= 20; ++n) {
      if (n % p == 0) continue;
      for (int l = 0; l <= 3; ++l) CHECK(cong1_n_report(p, n, l).holds);
    }
}

TEST_CASE("first congruence rejects bad input") {
  CHECK_THROWS_AS(cong1_report({3, 2, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(cong1_report({4, 3, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(cong1_report({3, 3, 0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(cong1_n_report(3, 6, 0), std::invalid_argument);
}

TEST_CASE("second congruence examples") {
  const auto a = cong2_report({3, 2, 0, 1});
  CHECK(a.lhs_sum == 9);
  CHECK(a.modulus == 9);
  CHECK(a.quotient == r(1));
  CHECK(a.predicted_quotient == r(1));
  CHECK(a.holds);
  const auto b = cong2_report({3, 1, 0, 2});
  CHECK(b.lhs_sum == 3);
  CHECK(b.quotient == r(1));
  CHECK(b.holds);
  for (auto p : {3, 5, 7})
    for (int l = 0; l <= 6; ++l)
      for (int s = 1; s < p; ++s) {
        const auto z = cong2_report({p, 0, l, s});
        CHECK(z.lhs_sum == binom(l, s - 1));
        CHECK(z.modulus == 1);
        CHECK(z.quotient == Rational(binom(l, s - 1)));
      }
  CHECK_THROWS_AS(cong2_report({3, 1, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(cong2_report({3, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("second congruence sweep") {
  for (auto p : {2, 3, 5, 7})
    for (int m = 0; m <= 6; ++m)
      for (int l = 0; l <= 6; ++l)
        for (int s = 1; s < p; ++s) {
          const auto rep = cong2_report({p, m, l, s});
          CHECK(rep.holds);
          CHECK(rep.quotient == rep.predicted_quotient);
          CHECK(*rep.predicted_quotient == a_poly(s - 1).evaluate(r(m), r(l), r(p)));
        }
}

TEST_CASE("second congruence quotient has degree s-1 in m") {
  for (auto p : {5, 7})
    for (int l = 0; l <= 3; ++l)
      for (int s = 1; s < p; ++s) {
        std::vector<Rational> qs;
        for (int m = 0; m < s + 4; ++m) qs.push_back(*cong2_report({p, m, l, s}).quotient);
        CHECK(has_degree(qs, static_cast<std::size_t>(s - 1)));
      }
}

TEST_CASE("second congruence read as an identity at composite n") {
  for (auto n : {4, 6, 8, 9})
    for (int m = 0; m <= 5; ++m)
      for (int l = 0; l <= 5; ++l)
        for (int s = 1; s <= 4; ++s) {
          const auto [lhs, rhs] = cong2_identity(n, m, l, s);
          CHECK(lhs == rhs);
        }
  // At composite n the quotient is no longer integral in general.
  bool saw_fraction = false;
  for (int m = 0; m <= 5; ++m)
    for (int l = 0; l <= 5; ++l)
      for (int s = 1; s <= 4; ++s)
        if (!is_integral(cong2_identity(4, m, l, s).first / pow(Rational(4), m))) saw_fraction = true;
  CHECK(saw_fraction);
  CHECK_THROWS_AS(cong2_identity(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("third congruence examples") {
  const auto a = cong3_report({3, 1, 0, 1});
  CHECK(a.lhs_sum == 3);
  CHECK(a.modulus == 3);
  CHECK(a.quotient == r(1));
  CHECK(a.holds);
  const auto b = cong3_report({3, 1, 1, 1});
  CHECK(b.lhs_sum == 1);
  CHECK(b.modulus == 1);
  CHECK(b.quotient == r(1));
  CHECK(b.holds);
  const auto c = cong3_report({2, 2, 0, 1});
  CHECK(c.lhs_sum == 4);
  CHECK(c.modulus == 4);
  CHECK(c.holds);
  CHECK_THROWS_AS(cong3_report({3, 1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cong3_report({3, 2, 1, 3}), std::invalid_argument);
}

TEST_CASE("third congruence sweep and vanishing below l") {
  for (auto p : {2, 3, 5})
    for (int l = 0; l <= 4; ++l)
      for (int m = l; m <= 5; ++m)
        for (int s = 1; s < p; ++s) {
          const auto rep = cong3_report({p, m, l, s});
          CHECK(rep.holds);
          CHECK(rep.lhs_sum == to_integer(pow(Rational(p), m) * a_value(l * (p - 1) + s - 1, s - 1, p, m)));
        }
  for (auto p : {2, 3, 5, 7})
    for (int l = 1; l <= 4; ++l)
      for (int m = 0; m < l; ++m)
        for (int s = 1; s < p; ++s) CHECK(a_value(l * (p - 1) + s - 1, s - 1, p, m) == 0);
  for (auto p : {2, 3, 5, 7})
    for (int l = 0; l <= 4; ++l)
      for (int s = 1; s < p; ++s)
        CHECK(pow(Rational(p), l) * a_value(l * (p - 1) + s - 1, s - 1, p, l) == 1);
}

TEST_CASE("third congruence quotient degree") {
  for (auto p : {2, 3})
    for (int l = 0; l <= 2; ++l)
      for (int s = 1; s < p; ++s) {
        const std::int64_t d = s - 1 + l * (p - 1);
        std::vector<Rational> vals;
        for (int m = 0; m < d + 4; ++m)
          vals.push_back(pow(Rational(p), l) * a_value(l * (p - 1) + s - 1, s - 1, p, m));
        CHECK(has_degree(vals, static_cast<std::size_t>(d)));
      }
}

TEST_CASE("binomial transform of the lacunary sequence") {
  CHECK(s_seq(3, 1, 0, 0) == 1);
  CHECK(s_seq(3, 1, 0, 1) == 2);
  CHECK(s_seq_transform_check(3, 1, 0, 4));
  CHECK(s_seq_transform_check(2, 1, 1, 4));
  for (auto p : {2, 3, 5})
    for (int s = 1; s < p; ++s)
      for (int l = 0; l <= 3; ++l) {
        CHECK(s_seq_transform_check(p, s, l, 0));
        CHECK(s_seq_transform_check(p, s, l, 5));
      }
  CHECK_THROWS_AS(s_seq_transform_check(3, 0, 0, 2), std::invalid_argument);
}

TEST_CASE("classical congruences") {
  const auto g = classical_check(ClassicalKind::glaisher, {3, 2, 1, 1, 0});
  CHECK(g.lhs_sum == 8);
  CHECK(g.target == 2);
  CHECK(g.modulus == 3);
  CHECK(g.holds);
  const auto f = classical_check(ClassicalKind::fleck, {2, 1, 1, 0, 2});
  CHECK(f.lhs_sum == 4);
  CHECK(f.modulus == 4);
  CHECK(f.holds);
  for (auto p : {2, 3, 5})
    for (int s = 1; s < p; ++s)
      for (int h = 0; h < p; ++h)
        for (int q = 0; q <= 3; ++q) {
          const auto fl = classical_check(ClassicalKind::fleck, {p, s, h, 0, q});
          const auto wa = classical_check(ClassicalKind::wan, {p, s, h, 0, q});
          CHECK(wa.lhs_sum == fl.lhs_sum);
          CHECK(fl.holds);
          // The quoted forms break at h = 0: residues 0 and p-1 share a class
          // for Glaisher, and the j = 1 term survives alone for Sun-Tauraso.
          CHECK(classical_check(ClassicalKind::suntauraso, {p, s, h, 0, q}).holds == (h > 0 || q == 0));
          for (int l = 0; l <= 3; ++l) {
            CHECK(classical_check(ClassicalKind::wan, {p, s, h, l, q}).holds);
            CHECK(classical_check(ClassicalKind::glaisher, {p, s, h, l, q}).holds == (h > 0 || s < p - 1));
          }
        }
  const auto g0 = classical_check(ClassicalKind::glaisher, {3, 2, 0, 0, 0});
  CHECK(g0.lhs_sum == 2);
  CHECK(g0.target == 1);
  CHECK_FALSE(g0.holds);
  const auto st0 = classical_check(ClassicalKind::suntauraso, {3, 1, 0, 0, 1});
  CHECK(st0.lhs_sum == -2);
  CHECK_FALSE(st0.holds);
  CHECK(classical_check(ClassicalKind::suntauraso, {7, 3, 5, 0, 4}).holds);
  CHECK_THROWS_AS(classical_check(ClassicalKind::fleck, {4, 1, 1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(classical_check(ClassicalKind::fleck, {3, 3, 1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(classical_check(ClassicalKind::fleck, {3, 1, 3, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(classical_check(ClassicalKind::wan, {3, 1, 1, -1, 1}), std::invalid_argument);
}

TEST_CASE("lacunary rewrites") {
  const auto a = lacunary_rewrite_check(RewriteForm::fleck_like, 3, 1, 1, 0);
  CHECK(a.lhs_sum == 0);
  CHECK(a.modulus == 9);
  CHECK(a.holds);
  const auto b = lacunary_rewrite_check(RewriteForm::adelberg_like, 3, 5, 0, 1);
  CHECK(b.lhs_sum == 0);
  CHECK(b.modulus == 9);
  CHECK(b.holds);
  const auto c = lacunary_rewrite_check(RewriteForm::adelberg_like, 3, 2, 1, 0);
  CHECK(c.modulus == 1);
  CHECK(c.holds);
  for (auto p : {2, 3, 5})
    for (int l = 0; l <= 2; ++l) {
      for (int m = 0; m < (p - 1) * (l + 1); ++m)
        for (int rr = 0; rr <= 2 * p; ++rr) CHECK(lacunary_rewrite_check(RewriteForm::fleck_like, p, m, l, rr).holds);
      for (int m = 0; m <= 16; ++m)
        for (int rr = 0; rr < p; ++rr) CHECK(lacunary_rewrite_check(RewriteForm::adelberg_like, p, m, l, rr).holds);
    }
  CHECK_THROWS_AS(lacunary_rewrite_check(RewriteForm::fleck_like, 3, 4, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(lacunary_rewrite_check(RewriteForm::adelberg_like, 3, 4, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(lacunary_rewrite_check(RewriteForm::adelberg_like, 6, 4, 1, 0), std::invalid_argument);
}

TEST_CASE("worked example identities") {
  for (int n = 1; n <= 8; ++n)
    for (int l = 0; l <= 6; ++l)
      for (int m = 0; m <= 8; ++m) {
        const auto [lhs, rhs] = example_identity_first(n, l, m);
        CHECK(Rational(lhs) == rhs);
      }
  for (int m = 0; m <= 10; ++m) {
    const auto [lhs, rhs] = example_identity_second(m);
    CHECK(Rational(lhs) == rhs);
  }
  CHECK(example_identity_second(0).first == 1);
  CHECK(example_identity_second(1).first == 7 * 2 * 2640 / 40);
}
