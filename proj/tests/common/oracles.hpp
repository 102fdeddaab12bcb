#pragma once

// Reference computations that share no code with the library: counting
// arguments, closed forms, and Fulton's algorithm for plane curves.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// ℓ(A/m^n) for A = k[x_1..x_r] local: monomials of degree < n.
inline std::uint64_t poly_colength_of_power(std::uint32_t r, std::uint32_t n) {
  return n == 0 ? 0 : binomial(n - 1 + r, r);
}

/// Monomials x^i y^j divisible by none of the generators.
inline std::uint64_t staircase(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& gens) {
  std::uint32_t bx = 0, by = 0;
  for (auto [a, b] : gens) {
    if (b == 0) bx = bx == 0 ? a : std::min(bx, a);
    if (a == 0) by = by == 0 ? b : std::min(by, b);
  }
  if (bx == 0 || by == 0) throw std::invalid_argument("staircase is infinite");
  std::uint64_t count = 0;
  for (std::uint32_t i = 0; i < bx; ++i)
    for (std::uint32_t j = 0; j < by; ++j) {
      bool inside = false;
      for (auto [a, b] : gens) inside = inside || (i >= a && j >= b);
      if (!inside) ++count;
    }
  return count;
}

/// Generators of (x^a, y^b)^k.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> monomial_power(std::uint32_t a, std::uint32_t b,
                                                                           std::uint32_t k) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> g;
  for (std::uint32_t i = 0; i <= k; ++i) g.emplace_back(a * i, b * (k - i));
  return g;
}

/// Numerical semigroup generated by `gens`: for each s < limit, the largest
/// number of generators summing to s (-1 if s is not in the semigroup).
inline std::vector<int> max_generator_count(const std::vector<std::uint32_t>& gens, std::uint32_t limit) {
  std::vector<int> best(limit, -1);
  best[0] = 0;
  for (std::uint32_t s = 1; s < limit; ++s)
    for (auto g : gens)
      if (g <= s && best[s - g] >= 0) best[s] = std::max(best[s], best[s - g] + 1);
  return best;
}

/// ℓ(A/m^k) for the semigroup ring: values s with fewer than k generators in every expression.
inline std::uint64_t curve_colength_of_power(const std::vector<std::uint32_t>& gens, std::uint32_t k) {
  const std::uint32_t limit = gens.back() * (k + 2) + 64;
  const auto best = max_generator_count(gens, limit);
  std::uint64_t count = 0;
  for (std::uint32_t s = 0; s < limit; ++s)
    if (best[s] >= 0 && best[s] < static_cast<int>(k)) ++count;
  return count;
}

/// Bivariate polynomial over F_p, exponent pair -> coefficient.
class Biv {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (x exponent, y exponent)
  explicit Biv(std::uint64_t p) : p_(p) {}

  void add(std::uint32_t i, std::uint32_t j, std::int64_t c) {
    const std::uint64_t v = static_cast<std::uint64_t>(((c % static_cast<std::int64_t>(p_)) + p_) % p_);
    auto& slot = t_[{i, j}];
    slot = (slot + v) % p_;
    if (slot == 0) t_.erase({i, j});
  }
  const std::map<Key, std::uint64_t>& terms() const { return t_; }
  bool zero() const { return t_.empty(); }
  std::uint64_t p() const { return p_; }
  std::uint64_t at(std::uint32_t i, std::uint32_t j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? 0 : it->second;
  }

 private:
  std::uint64_t p_;
  std::map<Key, std::uint64_t> t_;
};

/// Restriction to y = 0 as a dense coefficient list in x.
inline std::vector<std::uint64_t> on_x_axis(const Biv& f) {
  std::vector<std::uint64_t> out;
  for (const auto& [k, c] : f.terms()) {
    if (k.second != 0) continue;
    if (out.size() <= k.first) out.resize(k.first + 1, 0);
    out[k.first] = c;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// f - s * x^shift * g.
inline Biv axpy(const Biv& f, std::uint64_t s, std::uint32_t shift, const Biv& g) {
  Biv out = f;
  for (const auto& [k, c] : g.terms()) {
    const std::uint64_t v = s * c % f.p();
    out.add(k.first + shift, k.second, -static_cast<std::int64_t>(v));
  }
  return out;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline std::uint32_t total_degree(const Biv& f) {
  std::uint32_t d = 0;
  for (const auto& [k, c] : f.terms()) d = std::max(d, k.first + k.second);
  return d;
}

/// Recursive step; every level adds at least 1 to the result.
inline long fulton_step(Biv f, Biv g, long depth, long budget) {
  if (depth > budget) return -1;
  if (f.at(0, 0) != 0 || g.at(0, 0) != 0) return 0;
  if (f.zero() || g.zero()) return -1;
  for (;;) {
    auto fx = on_x_axis(f);
    auto gx = on_x_axis(g);
    if (fx.empty() && gx.empty()) return -1;  // y divides both
    if (fx.empty() || gx.empty()) {
      if (gx.empty()) std::swap(f, g), std::swap(fx, gx);
      // f = y h: I(f, g) = I(y, g) + I(h, g).
      Biv h(f.p());
      for (const auto& [k, c] : f.terms()) h.add(k.first, k.second - 1, static_cast<std::int64_t>(c));
      long ord = 0;
      while (gx[static_cast<std::size_t>(ord)] == 0) ++ord;
      const long rest = fulton_step(h, g, depth + ord, budget);
      return rest < 0 ? -1 : ord + rest;
    }
    if (fx.size() > gx.size()) std::swap(f, g), std::swap(fx, gx);
    const std::uint32_t shift = static_cast<std::uint32_t>(gx.size() - fx.size());
    const std::uint64_t s = gx.back() * inverse(fx.back(), f.p()) % f.p();
    g = axpy(g, s, shift, f);
    if (g.at(0, 0) != 0) return 0;
  }
}

/// Intersection multiplicity at the origin by Fulton's algorithm. Returns -1
/// when the curves share a component through the origin, detected by the
/// running total passing the Bezout bound deg f * deg g.
inline long fulton(const Biv& f, const Biv& g) {
  const long budget = static_cast<long>(total_degree(f)) * total_degree(g);
  return fulton_step(f, g, 0, budget);
}

}  // namespace oracle
