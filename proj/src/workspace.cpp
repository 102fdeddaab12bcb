#include "multlab/workspace.hpp"

#include <algorithm>
#include <cmath>

namespace multlab {

namespace {

constexpr std::size_t kAnnihilatorCacheSize = 3;

template <ExactField F>
std::string ideal_key(const std::vector<Polynomial<F>>& gens) {
  std::string key;
  for (const auto& g : gens) key += g.to_string() + "|";
  return key;
}

template <ExactField F>
std::string ideal_text(const std::vector<Polynomial<F>>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].to_string();
  }
  return out + ")";
}

}  // namespace

template <ExactField F>
Workspace<F>::Workspace(ModuleSpec<F> spec, Limits limits)
    : spec_(std::move(spec)), limits_(limits), catalog_(spec_.ring) {
  for (const auto& j : spec_.annihilator) {
    if (!(j.field() == spec_.field)) throw BackendMismatch("annihilator over a different field");
    if (j.vars() != spec_.ring.element_vars()) {
      throw DimensionMismatch("annihilator generator uses the wrong variables");
    }
  }
}

template <ExactField F>
Workspace<F>::~Workspace() = default;

template <ExactField F>
std::size_t Workspace<F>::ambient_dim(std::uint32_t n) {
  double estimate = 0;
  if (ring().is_curve()) {
    estimate = n;
  } else {
    const double r = static_cast<double>(ring().poly().vars.size());
    // C(n - 1 + r, r)
    estimate = 1;
    for (double i = 1; i <= r; ++i) estimate = estimate * (n - 1 + i) / i;
  }
  if (estimate > 2.0 * static_cast<double>(limits_.max_ambient) + 16) {
    throw ResourceLimit("truncation order " + std::to_string(n) + " exceeds the memory budget of " +
                        std::to_string(limits_.max_ambient) + " basis elements");
  }
  const std::size_t dim = catalog_.dim_below(n);
  if (dim > limits_.max_ambient) {
    throw ResourceLimit("truncation order " + std::to_string(n) + " needs " + std::to_string(dim) +
                        " basis elements, beyond the memory budget of " +
                        std::to_string(limits_.max_ambient));
  }
  return dim;
}

template <ExactField F>
typename Workspace<F>::Sparse Workspace<F>::sparse(const Polynomial<F>& a, std::uint32_t n) {
  Sparse out;
  const bool curve = ring().is_curve();
  for (const auto& [e, c] : a.terms()) {
    const std::uint32_t deg = curve ? e[0] : total_degree(e);
    if (deg >= n) break;  // terms are sorted by degree
    const long idx = catalog_.index_of(e);
    if (idx < 0) throw InputError("t^" + std::to_string(e[0]) + " does not lie in " + ring().describe());
    out.emplace_back(static_cast<std::size_t>(idx), c);
  }
  return out;
}

template <ExactField F>
typename Workspace<F>::Row Workspace<F>::dense(const Polynomial<F>& a, std::uint32_t n) {
  Row out(ambient_dim(n), field().zero());
  for (const auto& [i, c] : sparse(a, n)) out[i] = c;
  return out;
}

template <ExactField F>
typename Workspace<F>::Row Workspace<F>::multiply(const Sparse& a, const Row& v, std::uint32_t n) {
  const F& k = field();
  const std::size_t dim = catalog_.dim_below(n);
  Row out(dim, k.zero());
  for (const auto& [j, c] : a) {
    const auto& table = catalog_.product_table(j, n);
    for (std::size_t i = 0; i < dim; ++i) {
      if (k.is_zero(v[i])) continue;
      const std::int32_t t = table[i];
      if (t < 0 || static_cast<std::size_t>(t) >= dim) continue;
      out[t] = k.add(out[t], k.mul(c, v[i]));
    }
  }
  return out;
}

template <ExactField F>
typename Workspace<F>::Row Workspace<F>::multiply(const Sparse& a, const SparseRow<F>& v,
                                                  std::uint32_t n) {
  const F& k = field();
  const std::size_t dim = catalog_.dim_below(n);
  Row out(dim, k.zero());
  for (const auto& [j, c] : a) {
    const auto& table = catalog_.product_table(j, n);
    for (std::size_t e = 0; e < v.nnz() && v.index[e] < dim; ++e) {
      const std::int32_t t = table[v.index[e]];
      if (t < 0 || static_cast<std::size_t>(t) >= dim) continue;
      out[t] = k.add(out[t], k.mul(c, v.value[e]));
    }
  }
  return out;
}

template <ExactField F>
typename Workspace<F>::Row Workspace<F>::multiply_basis(const Sparse& a, std::size_t i,
                                                        std::uint32_t n) {
  const F& k = field();
  const std::size_t dim = catalog_.dim_below(n);
  Row out(dim, k.zero());
  for (const auto& [j, c] : a) {
    const std::int32_t t = catalog_.product_table(j, n)[i];
    if (t < 0 || static_cast<std::size_t>(t) >= dim) continue;
    out[t] = k.add(out[t], c);
  }
  return out;
}

template <ExactField F>
const SemiEchelon<F>& Workspace<F>::annihilator_image(std::uint32_t n) {
  for (const auto& [m, ech] : j_cache_) {
    if (m == n) return ech;
  }
  const std::size_t dim = ambient_dim(n);
  SemiEchelon<F> ech(field(), dim);
  for (const auto& j : spec_.annihilator) {
    const Sparse sp = sparse(j, n);
    if (sp.empty()) continue;
    const std::uint32_t ord = catalog_.degree(sp.front().first);
    for (std::size_t i = 0; i < dim; ++i) {
      if (catalog_.degree(i) + ord >= n) break;
      ech.insert(multiply_basis(sp, i, n));
    }
  }
  if (j_cache_.size() == kAnnihilatorCacheSize) j_cache_.pop_front();
  j_cache_.emplace_back(n, std::move(ech));
  return j_cache_.back().second;
}

template <ExactField F>
std::vector<typename Workspace<F>::Row> Workspace<F>::expand(const CertifiedIdeal<F>& ideal,
                                                             std::uint32_t n) {
  const F& k = field();
  const std::size_t dim = ambient_dim(n);
  std::vector<Row> out;
  for (const auto& r : ideal.rows) {
    if (r.index.front() < dim) out.push_back(to_dense(k, r, dim));
  }
  for (std::size_t i = ideal.tail_index; i < dim; ++i) {
    Row v(dim, k.zero());
    v[i] = k.one();
    out.push_back(std::move(v));
  }
  return out;
}

template <ExactField F>
SemiEchelon<F> Workspace<F>::ideal_image(const std::vector<IdealTerm<F>>& terms, std::uint32_t n) {
  const std::size_t dim = ambient_dim(n);
  SemiEchelon<F> ech = annihilator_image(n);
  for (const auto& term : terms) {
    const Sparse sp = sparse(term.multiplier, n);
    if (sp.empty()) continue;
    const std::uint32_t ord = catalog_.degree(sp.front().first);
    const std::size_t start = term.base == nullptr ? 0 : term.base->tail_index;
    if (term.base != nullptr) {
      for (const auto& r : term.base->rows) ech.insert(multiply(sp, r, n));
    }
    for (std::size_t i = start; i < dim; ++i) {
      if (catalog_.degree(i) + ord >= n) break;
      ech.insert(multiply_basis(sp, i, n));
    }
  }
  return ech;
}

template <ExactField F>
std::uint32_t Workspace<F>::min_certifying_order(std::uint32_t tail) const {
  if (!ring().is_curve()) return tail + 1;
  return std::max(tail, ring().conductor()) + ring().min_generator_order();
}

template <ExactField F>
std::optional<CertifiedIdeal<F>> Workspace<F>::try_certify(const std::vector<IdealTerm<F>>& terms,
                                                           std::uint32_t n) {
  SemiEchelon<F> ech = ideal_image(terms, n);
  const std::size_t dim = ech.cols();
  std::size_t c = dim;
  while (c > 0 && ech.has_pivot(c - 1)) --c;

  std::uint32_t tail = 0;
  if (c > 0) {
    if (c == dim) return std::nullopt;
    if (ring().is_curve()) {
      tail = catalog_.exponents(c)[0];
      if (n < min_certifying_order(tail)) return std::nullopt;
    } else {
      const std::uint32_t d = catalog_.degree(c);
      tail = catalog_.dim_below(d) == c ? d : d + 1;
      if (tail >= n) return std::nullopt;
    }
  }
  CertifiedIdeal<F> out;
  out.tail = tail;
  out.tail_index = c;
  out.certified_at = n;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    if (ech.pivot(i) < c) order.emplace_back(ech.pivot(i), i);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [p, i] : order) {
    const SparseRow<F>& r = ech.row(i);
    const auto keep = std::lower_bound(r.index.begin(), r.index.end(), c) - r.index.begin();
    out.rows.push_back({{r.index.begin(), r.index.begin() + keep}, {r.value.begin(), r.value.begin() + keep}});
    out.pivots.push_back(p);
  }
  return out;
}

template <ExactField F>
CertifiedIdeal<F> Workspace<F>::certify(const std::vector<IdealTerm<F>>& terms, std::uint32_t guess,
                                        bool bounded, std::uint32_t upper, const std::string& what) {
  std::uint32_t step = 2;
  for (const auto& t : terms) {
    if (!t.multiplier.is_zero()) step = std::max<std::uint32_t>(step, t.multiplier.degree());
  }
  std::uint32_t ceiling = limits_.n_ceiling;
  if (ring().is_curve()) ceiling += ring().conductor() + ring().min_generator_order();

  std::uint32_t n = std::max<std::uint32_t>(guess, 1);
  if (upper != 0) n = std::min(n, upper);
  for (;;) {
    if (bounded && n > ceiling) n = ceiling;
    if (auto r = try_certify(terms, n)) return std::move(*r);
    if (upper != 0 && n >= upper) {
      throw ComputationError("internal: no certificate at the guaranteed truncation order " +
                             std::to_string(upper));
    }
    if (bounded && n >= ceiling) {
      throw NonStabilizing(
          (what.empty() ? std::string("the ideal") : what) +
          " has no power of the maximal ideal in it up to truncation order " +
          std::to_string(ceiling) + "; it is probably not primary to the maximal ideal on M");
    }
    n += step;
    if (upper != 0) n = std::min(n, upper);
  }
}

template <ExactField F>
std::size_t Workspace<F>::colength(const std::vector<IdealTerm<F>>& terms, std::uint32_t guess,
                                   bool bounded) {
  return certify(terms, guess, bounded).colength();
}

template <ExactField F>
typename Workspace<F>::Row Workspace<F>::normal_form(const CertifiedIdeal<F>& ideal, Row v) const {
  const F& k = field();
  v.resize(ideal.tail_index, k.zero());
  for (std::size_t r = 0; r < ideal.rows.size(); ++r) {
    const std::size_t p = ideal.pivots[r];
    if (k.is_zero(v[p])) continue;
    const auto x = v[p];
    const SparseRow<F>& row = ideal.rows[r];
    for (std::size_t e = 0; e < row.nnz(); ++e) v[row.index[e]] = k.sub(v[row.index[e]], k.mul(x, row.value[e]));
  }
  return v;
}

template <ExactField F>
bool Workspace<F>::contains(const CertifiedIdeal<F>& ideal, const Polynomial<F>& a) {
  // dim A/m^(tail+1) covers every index below tail_index.
  Row v = dense(a, ideal.tail + 1);
  v = normal_form(ideal, std::move(v));
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return field().is_zero(x); });
}

template <ExactField F>
PowerLadder<F>& Workspace<F>::ladder(const std::vector<Polynomial<F>>& gens) {
  const std::string key = ideal_key(gens);
  auto it = ladders_.find(key);
  if (it == ladders_.end()) {
    it = ladders_.emplace(key, std::make_unique<PowerLadder<F>>(*this, gens)).first;
  }
  return *it->second;
}

template <ExactField F>
PowerLadder<F>::PowerLadder(Workspace<F>& ws, std::vector<Polynomial<F>> gens)
    : ws_(ws), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (!(g.field() == ws_.field())) throw BackendMismatch("ideal generator over a different field");
    if (g.vars() != ws_.ring().element_vars()) {
      throw DimensionMismatch("ideal generator uses the wrong variables");
    }
    if (!g.is_zero()) step_ = std::max<std::uint32_t>(step_, g.degree());
  }
}

template <ExactField F>
const CertifiedIdeal<F>& PowerLadder<F>::power(long k) {
  if (k <= 0) return ws_.unit_ideal();
  while (powers_.size() < static_cast<std::size_t>(k)) {
    const std::size_t m = powers_.size() + 1;
    std::vector<IdealTerm<F>> terms;
    std::uint32_t min_order = 0;
    std::uint32_t max_order = 0;
    bool first = true;
    for (const auto& g : gens_) {
      if (g.is_zero()) continue;
      terms.push_back({g, m == 1 ? nullptr : &powers_[m - 2]});
      const auto ord = static_cast<std::uint32_t>(g.order());
      min_order = first ? ord : std::min(min_order, ord);
      max_order = std::max(max_order, ord);
      first = false;
    }
    if (m == 1) {
      powers_.push_back(ws_.certify(terms, ws_.min_certifying_order(std::max<std::uint32_t>(max_order, 1)),
                                    true, 0, "the ideal " + ideal_text(gens_)));
      continue;
    }
    const std::uint32_t t1 = powers_.front().tail;
    const std::uint32_t tp = powers_[m - 2].tail;
    std::uint32_t guess = tp + min_order;
    if (m >= 3) guess = std::max(guess, 2 * tp - std::min(tp, powers_[m - 3].tail));
    std::uint32_t upper_tail = tp + t1;
    if (ws_.ring().is_curve()) {
      const std::uint32_t c = ws_.ring().conductor();
      upper_tail = std::max(tp, c) + std::max(t1, c);
    }
    const std::uint32_t upper = ws_.min_certifying_order(upper_tail);
    powers_.push_back(ws_.certify(terms, std::min(ws_.min_certifying_order(guess), upper), false, upper));
  }
  return powers_[static_cast<std::size_t>(k) - 1];
}

template class Workspace<PrimeField>;
template class Workspace<RationalField>;
template class PowerLadder<PrimeField>;
template class PowerLadder<RationalField>;

}  // namespace multlab
