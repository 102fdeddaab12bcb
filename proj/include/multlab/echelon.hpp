#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "multlab/field.hpp"
#include "multlab/matrix.hpp"

namespace multlab {

/// Nonzero entries of a vector, by ascending column.
template <ExactField F>
struct SparseRow {
  std::vector<std::size_t> index;
  std::vector<typename F::value_type> value;

  std::size_t nnz() const noexcept { return index.size(); }
  bool empty() const noexcept { return index.empty(); }
};

/// Entries of `v` in columns below `limit`.
template <ExactField F>
SparseRow<F> to_sparse(const F& field, const std::vector<typename F::value_type>& v,
                       std::size_t limit = static_cast<std::size_t>(-1)) {
  SparseRow<F> out;
  const std::size_t n = std::min(limit, v.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (!field.is_zero(v[j])) {
      out.index.push_back(j);
      out.value.push_back(v[j]);
    }
  }
  return out;
}

/// Dense copy of width `cols`; entries at or beyond `cols` are dropped.
template <ExactField F>
std::vector<typename F::value_type> to_dense(const F& field, const SparseRow<F>& r, std::size_t cols) {
  std::vector<typename F::value_type> out(cols, field.zero());
  for (std::size_t k = 0; k < r.nnz() && r.index[k] < cols; ++k) out[r.index[k]] = r.value[k];
  return out;
}

/// Incrementally built semi-echelon basis: every stored row is normalized
/// so that its leading (first nonzero) entry is 1, and no two rows share a
/// leading column. Reduction against it yields the unique normal form that
/// vanishes on every pivot column.
///
/// Rows are stored sparse. Over a prime field, reduction accumulates in
/// 64-bit words and only reduces modulo p when overflow could occur.
template <ExactField F>
class SemiEchelon {
 public:
  using value_type = typename F::value_type;
  using Row = std::vector<value_type>;

  SemiEchelon(F field, std::size_t cols);

  const F& field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  void reduce(Row& v) const;
  /// Returns true when v was independent of the current rows.
  bool insert(Row v);
  bool contains(Row v) const;

  bool has_pivot(std::size_t col) const { return row_at_col_[col] >= 0; }
  const SparseRow<F>& row(std::size_t i) const { return rows_[i]; }
  Row dense_row(std::size_t i) const { return to_dense(field_, rows_[i], cols_); }
  std::size_t pivot(std::size_t i) const { return rows_[i].index.front(); }

  /// Pads (or cuts) every row to `new_cols` columns. Rows whose pivot falls
  /// beyond a cut are dropped.
  void resize_cols(std::size_t new_cols);

  /// Fully reduced basis, rows ordered by pivot column.
  Matrix<F> to_rref() const;
  std::vector<std::size_t> sorted_pivots() const;

 private:
  F field_;
  std::size_t cols_;
  std::vector<SparseRow<F>> rows_;
  std::vector<std::int32_t> row_at_col_;
};

extern template class SemiEchelon<PrimeField>;
extern template class SemiEchelon<RationalField>;

}  // namespace multlab
