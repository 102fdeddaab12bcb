#include "multlab/subspace.hpp"

#include "multlab/echelon.hpp"

namespace multlab {

template <ExactField F>
Subspace<F> Subspace<F>::span_of(const Matrix<F>& generators) {
  SemiEchelon<F> ech(generators.field(), generators.cols());
  for (std::size_t r = 0; r < generators.rows(); ++r) ech.insert(generators.row_vector(r));
  return Subspace(ech.to_rref(), ech.sorted_pivots());
}

template <ExactField F>
Subspace<F> Subspace<F>::span_of(F field, std::size_t ambient, const std::vector<Row>& generators) {
  SemiEchelon<F> ech(std::move(field), ambient);
  for (const auto& g : generators) ech.insert(g);
  return Subspace(ech.to_rref(), ech.sorted_pivots());
}

template <ExactField F>
Subspace<F> Subspace<F>::zero(F field, std::size_t ambient) {
  return Subspace(Matrix<F>(std::move(field), 0, ambient), {});
}

template <ExactField F>
Subspace<F> Subspace<F>::full(F field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix<F>::identity(std::move(field), ambient), std::move(piv));
}

template <ExactField F>
void Subspace<F>::require_compatible(const Subspace& other, const char* where) const {
  require_same_field(field(), other.field(), where);
  if (ambient_dim() != other.ambient_dim()) {
    throw DimensionMismatch(std::string(where) + ": ambient dimensions " +
                            std::to_string(ambient_dim()) + " and " +
                            std::to_string(other.ambient_dim()));
  }
}

template <ExactField F>
typename Subspace<F>::Row Subspace<F>::reduce(Row v) const {
  if (v.size() != ambient_dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " tested against a subspace of F^" + std::to_string(ambient_dim()));
  }
  const F& k = field();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const auto x = v[pivots_[i]];
    if (k.is_zero(x)) continue;
    for (std::size_t j = pivots_[i]; j < v.size(); ++j) {
      const auto& b = basis_(i, j);
      if (!k.is_zero(b)) v[j] = k.sub(v[j], k.mul(x, b));
    }
  }
  return v;
}

template <ExactField F>
bool Subspace<F>::contains(const Row& v) const {
  const Row r = reduce(v);
  for (const auto& x : r) {
    if (!field().is_zero(x)) return false;
  }
  return true;
}

template <ExactField F>
bool Subspace<F>::is_subspace_of(const Subspace& other) const {
  require_compatible(other, "subspace inclusion");
  if (dim() > other.dim()) return false;
  for (std::size_t r = 0; r < dim(); ++r) {
    if (!other.contains(basis_.row_vector(r))) return false;
  }
  return true;
}

template <ExactField F>
bool Subspace<F>::operator==(const Subspace& other) const {
  // Reduced row-echelon bases are unique.
  return field() == other.field() && pivots_ == other.pivots_ && basis_ == other.basis_;
}

template <ExactField F>
Subspace<F> Subspace<F>::sum(const Subspace& other) const {
  require_compatible(other, "subspace sum");
  SemiEchelon<F> ech(field(), ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) ech.insert(basis_.row_vector(r));
  for (std::size_t r = 0; r < other.dim(); ++r) ech.insert(other.basis_.row_vector(r));
  return Subspace(ech.to_rref(), ech.sorted_pivots());
}

template <ExactField F>
Subspace<F> Subspace<F>::intersection(const Subspace& other) const {
  require_compatible(other, "subspace intersection");
  const F& k = field();
  const std::size_t n = ambient_dim();
  SemiEchelon<F> ech(k, 2 * n);
  for (std::size_t r = 0; r < dim(); ++r) {
    Row v(2 * n, k.zero());
    for (std::size_t j = 0; j < n; ++j) v[j] = v[n + j] = basis_(r, j);
    ech.insert(std::move(v));
  }
  for (std::size_t r = 0; r < other.dim(); ++r) {
    Row v(2 * n, k.zero());
    for (std::size_t j = 0; j < n; ++j) v[j] = other.basis_(r, j);
    ech.insert(std::move(v));
  }
  std::vector<Row> gens;
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    if (ech.pivot(i) < n) continue;
    const Row row = ech.dense_row(i);
    gens.emplace_back(row.begin() + static_cast<long>(n), row.end());
  }
  return span_of(k, n, gens);
}

template <ExactField F>
Subspace<F> preimage_under(const Matrix<F>& map, const Subspace<F>& target) {
  require_same_field(map.field(), target.field(), "preimage");
  if (map.rows() != target.ambient_dim()) {
    throw DimensionMismatch("preimage: map lands in F^" + std::to_string(map.rows()) +
                            " but the target lives in F^" + std::to_string(target.ambient_dim()));
  }
  // v lies in the preimage iff the projection of map·v onto the non-pivot
  // coordinates of the target (along the target) vanishes.
  const F& k = map.field();
  const auto& piv = target.pivots();
  const auto& b = target.basis();
  std::vector<bool> is_pivot(map.rows(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < map.rows(); ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Matrix<F> proj(k, free.size(), map.cols());
  for (std::size_t f = 0; f < free.size(); ++f) {
    const std::size_t j = free[f];
    for (std::size_t c = 0; c < map.cols(); ++c) proj(f, c) = map(j, c);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      const auto& coef = b(r, j);
      if (k.is_zero(coef)) continue;
      for (std::size_t c = 0; c < map.cols(); ++c) {
        const auto& m = map(piv[r], c);
        if (!k.is_zero(m)) proj(f, c) = k.sub(proj(f, c), k.mul(coef, m));
      }
    }
  }
  return kernel_basis(proj);
}

template class Subspace<PrimeField>;
template class Subspace<RationalField>;
template Subspace<PrimeField> preimage_under(const Matrix<PrimeField>&, const Subspace<PrimeField>&);
template Subspace<RationalField> preimage_under(const Matrix<RationalField>&,
                                                const Subspace<RationalField>&);

}  // namespace multlab
