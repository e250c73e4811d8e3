#include "lacuna/adelberg.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lacuna/series.hpp"

namespace lacuna {

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(const Rational& c) { add_term({0, 0, 0}, c); }

MultiPoly MultiPoly::variable(Var v) {
  Monomial e{0, 0, 0};
  e[static_cast<std::size_t>(v)] = 1;
  return term(1, e);
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& exponents) {
  MultiPoly poly;
  poly.add_term(exponents, c);
  return poly;
}

void MultiPoly::add_term(const Monomial& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational MultiPoly::coeff(const Monomial& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t MultiPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t exponent) const {
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& replacement) const {
  const auto idx = static_cast<std::size_t>(v);
  std::vector<MultiPoly> powers{MultiPoly(Rational(1))};
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[idx]) powers.push_back(powers.back() * replacement);
    Monomial rest = e;
    rest[idx] = 0;
    out += term(c, rest) * powers[e[idx]];
  }
  return out;
}

MultiPoly MultiPoly::substitute(Var v, const Rational& value) const {
  return substitute(v, MultiPoly(value));
}

Rational MultiPoly::evaluate(const Rational& m, const Rational& x, const Rational& y) const {
  const std::array<const Rational*, 3> values{&m, &x, &y};
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] != 0) t *= lacuna::pow(*values[i], static_cast<std::int64_t>(e[i]));
    }
    sum += t;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const auto da = a.first[0] + a.first[1] + a.first[2];
    const auto db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da < db;
    return a.first < b.first;
  });
  static constexpr std::array<char, 3> names{'m', 'x', 'y'};
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += names[i];
      if (e[i] > 1) monomial += '^' + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out << lacuna::to_string(magnitude);
    } else if (magnitude == 1) {
      out << monomial;
    } else {
      out << lacuna::to_string(magnitude) << '*' << monomial;
    }
  }
  return out.str();
}

MultiPoly binom_poly(Var v, std::int64_t shift, std::int64_t j) {
  if (j < 0) return {};
  const MultiPoly var = MultiPoly::variable(v);
  MultiPoly result(Rational(1));
  for (std::int64_t i = 0; i < j; ++i) result = result * (var - MultiPoly(shift + i));
  result *= make_rational(1, factorial(j));
  return result;
}

// ---------------------------------------------------------------------------
// Partitions and compositions

std::int64_t PartitionMultiplicity::total() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) sum += static_cast<std::int64_t>(i + 1) * t[i];
  return sum;
}

std::int64_t PartitionMultiplicity::num_parts() const {
  return std::accumulate(t.begin(), t.end(), std::int64_t{0});
}

AdelbergIndex AdelbergIndex::make(std::int64_t p, std::int64_t l, std::int64_t s) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (l < 0) throw std::invalid_argument("l must be nonnegative");
  if (s <= 0 || s >= p) throw std::invalid_argument("s must satisfy 0 < s < p");
  return {p, l, s};
}

namespace {

void partitions_rec(std::int64_t remaining, std::int64_t max_part, PartitionMultiplicity& current,
                    std::vector<PartitionMultiplicity>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
    ++current.t[part - 1];
    partitions_rec(remaining - part, part, current, out);
    --current.t[part - 1];
  }
}

void compositions_rec(std::int64_t remaining, std::size_t slot, WeakComposition& current,
                      std::vector<WeakComposition>& out) {
  if (slot + 1 == current.k.size()) {
    current.k[slot] = remaining;
    out.push_back(current);
    return;
  }
  for (std::int64_t v = 0; v <= remaining; ++v) {
    current.k[slot] = v;
    compositions_rec(remaining - v, slot + 1, current, out);
  }
}

// C(y-1, j)/(j+1) as a polynomial in y.
MultiPoly b_factor(std::int64_t j) {
  MultiPoly f = binom_poly(Var::y, 1, j);
  f *= make_rational(1, j + 1);
  return f;
}

MultiPoly compute_b_poly(std::int64_t u) {
  std::vector<MultiPoly> factors;
  for (std::int64_t j = 0; j <= u; ++j) factors.push_back(b_factor(j));
  MultiPoly sum;
  for (const auto& partition : partitions_of(u)) {
    // C(m, t_u) C(m - t_u, t_{u-1}) ... C(m - t_u - ... - t_2, t_1)
    MultiPoly summand(Rational(1));
    std::int64_t used = 0;
    for (std::int64_t j = u; j >= 1; --j) {
      const std::int64_t t = partition.count(j);
      if (t == 0) continue;
      summand = summand * binom_poly(Var::m, used, t) * factors[j].pow(static_cast<std::uint32_t>(t));
      used += t;
    }
    sum += summand;
  }
  return sum;
}

MultiPoly compute_a_poly(std::int64_t u) {
  MultiPoly sum;
  for (std::int64_t j = 0; j <= u; ++j) sum += binom_poly(Var::x, 0, j) * b_poly(u - j);
  return sum;
}

// g(z)^m0 through degree u, g(z) = sum_j C(y0-1, j)/(j+1) z^j.
TruncSeries b_generating_power(std::int64_t u, std::int64_t y0, std::int64_t m0) {
  std::vector<Rational> g(static_cast<std::size_t>(u) + 1);
  for (std::int64_t j = 0; j <= u; ++j) g[j] = make_rational(binom(y0 - 1, j), j + 1);
  return TruncSeries(u, std::move(g)).pow(m0);
}

template <typename Compute>
MultiPoly memoized(std::map<std::int64_t, MultiPoly>& cache, std::mutex& mutex, std::int64_t u,
                   Compute compute) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(u); it != cache.end()) return it->second;
  }
  MultiPoly value = compute(u);
  std::lock_guard lock(mutex);
  return cache.try_emplace(u, std::move(value)).first->second;
}

}  // namespace

std::vector<PartitionMultiplicity> partitions_of(std::int64_t u) {
  if (u < 0) throw std::invalid_argument("partitions_of: u must be nonnegative");
  std::vector<PartitionMultiplicity> out;
  PartitionMultiplicity current{std::vector<std::int64_t>(static_cast<std::size_t>(u), 0)};
  partitions_rec(u, u, current, out);
  return out;
}

std::vector<WeakComposition> weak_compositions(std::int64_t u, std::int64_t m) {
  if (u < 0 || m < 0) throw std::invalid_argument("weak_compositions: negative argument");
  std::vector<WeakComposition> out;
  if (m == 0) {
    if (u == 0) out.push_back({});
    return out;
  }
  WeakComposition current{std::vector<std::int64_t>(static_cast<std::size_t>(m), 0)};
  compositions_rec(u, 0, current, out);
  return out;
}

MultiPoly b_poly(std::int64_t u) {
  if (u < 0) throw std::invalid_argument("b_poly: u must be nonnegative");
  static std::map<std::int64_t, MultiPoly> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, u, compute_b_poly);
}

MultiPoly a_poly(std::int64_t u) {
  if (u < 0) throw std::invalid_argument("a_poly: u must be nonnegative");
  static std::map<std::int64_t, MultiPoly> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, u, compute_a_poly);
}

Rational b_value(std::int64_t u, std::int64_t y0, std::int64_t m0) {
  if (u < 0) throw std::invalid_argument("b_value: u must be nonnegative");
  return b_generating_power(u, y0, m0).coeff(u);
}

Rational a_value(std::int64_t u, std::int64_t x0, std::int64_t y0, std::int64_t m0) {
  if (u < 0) throw std::invalid_argument("a_value: u must be nonnegative");
  const TruncSeries b = b_generating_power(u, y0, m0);
  Rational sum = 0;
  for (std::int64_t j = 0; j <= u; ++j) sum += Rational(binom(x0, j)) * b.coeff(u - j);
  return sum;
}

Rational a_num_divided_difference(std::int64_t u, std::int64_t x0, std::int64_t y0,
                                  std::int64_t m0) {
  if (y0 == 0) throw std::invalid_argument("divided difference with zero increment");
  if (m0 < 0) throw std::invalid_argument("divided difference of negative order");
  Integer sum = 0;
  for (std::int64_t k = 0; k <= m0; ++k) {
    const Integer term = binom(m0, k) * binom(x0 + k * y0, m0 + u);
    if ((m0 - k) % 2 == 0) sum += term; else sum -= term;
  }
  return make_rational(sum, 1) / pow(Rational(static_cast<long>(y0)), m0);
}

MultiPoly b_poly_from_compositions(std::int64_t u, std::int64_t m0) {
  std::vector<MultiPoly> factors;
  for (std::int64_t j = 0; j <= u; ++j) factors.push_back(b_factor(j));
  MultiPoly sum;
  for (const auto& composition : weak_compositions(u, m0)) {
    MultiPoly summand(Rational(1));
    for (auto k : composition.k) summand = summand * factors[k];
    sum += summand;
  }
  return sum;
}

bool sym_sxvi_check(std::int64_t u, std::int64_t m0, std::int64_t y0) {
  if (u < 0 || m0 < 0 || y0 < 1) throw std::invalid_argument("sym_sxvi_check: invalid arguments");
  const MultiPoly a = a_poly(u);
  const MultiPoly x = MultiPoly::variable(Var::x);
  MultiPoly lhs;
  for (std::int64_t j = 0; j <= m0; ++j) {
    MultiPoly shifted = a.substitute(Var::m, Rational(static_cast<long>(j)))
                            .substitute(Var::y, Rational(static_cast<long>(y0)))
                            .substitute(Var::x, x + MultiPoly(j));
    shifted *= Rational(binom(m0, j) * pow(Integer(static_cast<long>(y0)), static_cast<std::uint64_t>(j)));
    lhs += shifted;
  }
  MultiPoly rhs = a.substitute(Var::m, Rational(static_cast<long>(m0)))
                      .substitute(Var::y, Rational(static_cast<long>(y0 + 1)));
  rhs *= Rational(pow(Integer(static_cast<long>(y0 + 1)), static_cast<std::uint64_t>(m0)));
  return lhs == rhs;
}

bool scaled_b_integrality(std::int64_t p, std::int64_t l, std::int64_t s, std::int64_t m_lo,
                          std::int64_t m_hi) {
  const auto index = AdelbergIndex::make(p, l, s);
  if (m_lo > m_hi) throw std::invalid_argument("scaled_b_integrality: empty m range");
  const Rational scale(pow(Integer(static_cast<long>(p)), static_cast<std::uint64_t>(l)));
  for (std::int64_t m0 = m_lo; m0 <= m_hi; ++m0) {
    if (!is_integral(scale * b_value(index.u(), p, m0))) return false;
  }
  return true;
}

}  // namespace lacuna
