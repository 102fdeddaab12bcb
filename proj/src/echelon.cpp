#include "multlab/echelon.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>

namespace multlab {

namespace {

// Number of products (p-1)^2 that fit on top of a residue in a 64-bit word.
std::uint64_t accumulation_budget(std::uint32_t p) {
  const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
  if (sq == 0) return std::numeric_limits<std::uint64_t>::max();
  return (std::numeric_limits<std::uint64_t>::max() - p) / sq;
}

template <class Row, class F>
std::size_t first_nonzero(const Row& v, const F& k) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!k.is_zero(v[i])) return i;
  }
  return v.size();
}

}  // namespace

template <ExactField F>
SemiEchelon<F>::SemiEchelon(F field, std::size_t cols)
    : field_(std::move(field)), cols_(cols), row_at_col_(cols, -1) {}

template <ExactField F>
void SemiEchelon<F>::reduce(Row& v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " reduced against an echelon basis of width " +
                            std::to_string(cols_));
  }
  if (rows_.empty()) return;
  const std::size_t start = first_nonzero(v, field_);
  if (start == cols_) return;

  if constexpr (std::is_same_v<F, PrimeField>) {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t budget = accumulation_budget(field_.modulus());
    std::vector<std::uint64_t> acc(v.begin(), v.end());
    std::uint64_t pending = 0;
    for (std::size_t c = start; c < cols_; ++c) {
      const std::int32_t r = row_at_col_[c];
      if (r < 0) continue;
      const std::uint64_t x = acc[c] % p;
      if (x == 0) {
        acc[c] = 0;
        continue;
      }
      if (pending == budget) {
        for (std::size_t j = c; j < cols_; ++j) acc[j] %= p;
        pending = 0;
      }
      const std::uint64_t f = p - x;
      const auto& row = rows_[r];
      for (std::size_t k = 1; k < row.nnz(); ++k) acc[row.index[k]] += f * row.value[k];
      acc[c] = 0;
      ++pending;
    }
    for (std::size_t j = start; j < cols_; ++j) v[j] = static_cast<std::uint32_t>(acc[j] % p);
  } else {
    value_type t;
    for (std::size_t c = start; c < cols_; ++c) {
      const std::int32_t r = row_at_col_[c];
      if (r < 0 || field_.is_zero(v[c])) continue;
      const auto& row = rows_[r];
      for (std::size_t k = 1; k < row.nnz(); ++k) {
        t = v[c] * row.value[k];
        v[row.index[k]] -= t;
      }
      v[c] = 0;
    }
  }
}

template <ExactField F>
bool SemiEchelon<F>::insert(Row v) {
  reduce(v);
  const std::size_t lead = first_nonzero(v, field_);
  if (lead == cols_) return false;
  SparseRow<F> row = to_sparse(field_, v);
  if (!field_.is_one(row.value[0])) {
    const auto s = field_.inv(row.value[0]);
    for (auto& x : row.value) x = field_.mul(x, s);
  }
  row_at_col_[lead] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

template <ExactField F>
bool SemiEchelon<F>::contains(Row v) const {
  reduce(v);
  return first_nonzero(v, field_) == cols_;
}

template <ExactField F>
void SemiEchelon<F>::resize_cols(std::size_t new_cols) {
  if (new_cols >= cols_) {
    row_at_col_.resize(new_cols, -1);
    cols_ = new_cols;
    return;
  }
  std::vector<SparseRow<F>> old = std::move(rows_);
  rows_.clear();
  row_at_col_.assign(new_cols, -1);
  cols_ = new_cols;
  for (auto& r : old) {
    if (r.index.front() >= new_cols) continue;
    const auto keep = static_cast<std::size_t>(
        std::lower_bound(r.index.begin(), r.index.end(), new_cols) - r.index.begin());
    r.index.resize(keep);
    r.value.resize(keep);
    row_at_col_[r.index.front()] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
  }
}

template <ExactField F>
std::vector<std::size_t> SemiEchelon<F>::sorted_pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.index.front());
  std::sort(out.begin(), out.end());
  return out;
}

template <ExactField F>
Matrix<F> SemiEchelon<F>::to_rref() const {
  const std::vector<std::size_t> piv = sorted_pivots();
  Matrix<F> out(field_, piv.size(), cols_);
  // Rows are reduced in descending pivot order so that every row used for
  // elimination is already fully reduced.
  std::vector<Row> reduced(piv.size());
  for (std::size_t i = piv.size(); i-- > 0;) {
    Row row = to_dense(field_, rows_[row_at_col_[piv[i]]], cols_);
    for (std::size_t k = i + 1; k < piv.size(); ++k) {
      const auto x = row[piv[k]];
      if (field_.is_zero(x)) continue;
      const Row& other = reduced[k];
      for (std::size_t j = piv[k]; j < cols_; ++j) {
        if (!field_.is_zero(other[j])) row[j] = field_.sub(row[j], field_.mul(x, other[j]));
      }
    }
    reduced[i] = std::move(row);
  }
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = reduced[i][j];
  return out;
}

template class SemiEchelon<PrimeField>;
template class SemiEchelon<RationalField>;

}  // namespace multlab
