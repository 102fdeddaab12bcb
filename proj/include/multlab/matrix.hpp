#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "multlab/errors.hpp"
#include "multlab/field.hpp"

namespace multlab {

template <ExactField F>
void require_same_field(const F& a, const F& b, const char* where) {
  if (!(a == b)) {
    throw BackendMismatch(std::string(where) + ": operands live over " + a.name() +
                          " and " + b.name());
  }
}

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  using value_type = typename F::value_type;
  using Row = std::vector<value_type>;

  Matrix(F field, std::size_t rows, std::size_t cols);

  static Matrix identity(F field, std::size_t n);
  static Matrix from_rows(F field, std::size_t cols, const std::vector<Row>& rows);
  static Matrix from_ints(F field, const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const F& field() const noexcept { return field_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const value_type> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Row row_vector(std::size_t r) const { return Row(row(r).begin(), row(r).end()); }
  Row column_vector(std::size_t c) const;

  bool is_zero() const;
  Matrix transpose() const;
  Row apply(std::span<const value_type> v) const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const value_type& s) const;

  bool operator==(const Matrix& other) const;

  std::string to_string() const;

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <ExactField F>
struct RrefResult {
  Matrix<F> reduced;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

template <ExactField F>
RrefResult<F> rref(const Matrix<F>& m);

template <ExactField F>
std::size_t rank(const Matrix<F>& m);

template <ExactField F>
class Subspace;

/// Basis of {v : m v = 0}.
template <ExactField F>
Subspace<F> kernel_basis(const Matrix<F>& m);

extern template class Matrix<PrimeField>;
extern template class Matrix<RationalField>;
extern template RrefResult<PrimeField> rref(const Matrix<PrimeField>&);
extern template RrefResult<RationalField> rref(const Matrix<RationalField>&);
extern template std::size_t rank(const Matrix<PrimeField>&);
extern template std::size_t rank(const Matrix<RationalField>&);

}  // namespace multlab
