#include "multlab/matrix.hpp"

#include <sstream>

#include "multlab/echelon.hpp"
#include "multlab/subspace.hpp"

namespace multlab {

template <ExactField F>
Matrix<F>::Matrix(F field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

template <ExactField F>
Matrix<F> Matrix<F>::identity(F field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
  return m;
}

template <ExactField F>
Matrix<F> Matrix<F>::from_rows(F field, std::size_t cols, const std::vector<Row>& rows) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("matrix row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " entries, expected " +
                              std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <ExactField F>
Matrix<F> Matrix<F>::from_ints(F field, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.from_int(rows[r][c]);
  }
  return m;
}

template <ExactField F>
typename Matrix<F>::Row Matrix<F>::column_vector(std::size_t c) const {
  Row out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

template <ExactField F>
bool Matrix<F>::is_zero() const {
  for (const auto& x : data_) {
    if (!field_.is_zero(x)) return false;
  }
  return true;
}

template <ExactField F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <ExactField F>
typename Matrix<F>::Row Matrix<F>::apply(std::span<const value_type> v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " applied to a matrix with " + std::to_string(cols_) + " columns");
  }
  Row out(rows_, field_.zero());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (field_.is_zero(v[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& a = (*this)(r, c);
      if (!field_.is_zero(a)) out[r] = field_.add(out[r], field_.mul(a, v[c]));
    }
  }
  return out;
}

template <ExactField F>
Matrix<F> Matrix<F>::operator*(const Matrix& other) const {
  require_same_field(field_, other.field_, "matrix product");
  if (cols_ != other.rows_) {
    throw DimensionMismatch("matrix product of " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " and " + std::to_string(other.rows_) + "x" +
                            std::to_string(other.cols_));
  }
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const auto& b = other(k, c);
        if (!field_.is_zero(b)) out(r, c) = field_.add(out(r, c), field_.mul(a, b));
      }
    }
  }
  return out;
}

template <ExactField F>
Matrix<F> Matrix<F>::operator+(const Matrix& other) const {
  require_same_field(field_, other.field_, "matrix sum");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shapes");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], other.data_[i]);
  return out;
}

template <ExactField F>
Matrix<F> Matrix<F>::operator-(const Matrix& other) const {
  require_same_field(field_, other.field_, "matrix difference");
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("matrix difference shapes");
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], other.data_[i]);
  return out;
}

template <ExactField F>
Matrix<F> Matrix<F>::scaled(const value_type& s) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

template <ExactField F>
bool Matrix<F>::operator==(const Matrix& other) const {
  if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!field_.equal(data_[i], other.data_[i])) return false;
  }
  return true;
}

template <ExactField F>
std::string Matrix<F>::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ", ";
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << field_.format((*this)(r, c));
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

template <ExactField F>
RrefResult<F> rref(const Matrix<F>& m) {
  SemiEchelon<F> ech(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row_vector(r));
  Matrix<F> basis = ech.to_rref();
  Matrix<F> reduced(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = basis(r, c);
  return {std::move(reduced), ech.rank(), ech.sorted_pivots()};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  SemiEchelon<F> ech(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row_vector(r));
  return ech.rank();
}

template <ExactField F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  const F& k = m.field();
  SemiEchelon<F> ech(k, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row_vector(r));
  Matrix<F> red = ech.to_rref();
  std::vector<std::size_t> piv = ech.sorted_pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;

  std::vector<typename Matrix<F>::Row> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    typename Matrix<F>::Row v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = k.neg(red(i, free));
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span_of(k, m.cols(), gens);
}

template class Matrix<PrimeField>;
template class Matrix<RationalField>;
template RrefResult<PrimeField> rref(const Matrix<PrimeField>&);
template RrefResult<RationalField> rref(const Matrix<RationalField>&);
template std::size_t rank(const Matrix<PrimeField>&);
template std::size_t rank(const Matrix<RationalField>&);
template Subspace<PrimeField> kernel_basis(const Matrix<PrimeField>&);
template Subspace<RationalField> kernel_basis(const Matrix<RationalField>&);

}  // namespace multlab
