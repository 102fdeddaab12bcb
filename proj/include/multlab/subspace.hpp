#pragma once

#include <cstddef>
#include <vector>

#include "multlab/field.hpp"
#include "multlab/matrix.hpp"

namespace multlab {

/// A linear subspace of F^n held as a reduced row-echelon basis.
template <ExactField F>
class Subspace {
 public:
  using value_type = typename F::value_type;
  using Row = std::vector<value_type>;

  static Subspace span_of(const Matrix<F>& generators);
  static Subspace span_of(F field, std::size_t ambient, const std::vector<Row>& generators);
  static Subspace zero(F field, std::size_t ambient);
  static Subspace full(F field, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix<F>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const F& field() const noexcept { return basis_.field(); }

  /// Normal form of v modulo the subspace (zero on every pivot column).
  Row reduce(Row v) const;
  bool contains(const Row& v) const;
  bool is_subspace_of(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  /// Zassenhaus: row-reduce [[A, A], [B, 0]]; rows with vanishing left half span A ∩ B.
  Subspace intersection(const Subspace& other) const;

 private:
  explicit Subspace(Matrix<F> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  void require_compatible(const Subspace& other, const char* where) const;

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : map · v ∈ target}; `map` sends F^cols to F^rows.
template <ExactField F>
Subspace<F> preimage_under(const Matrix<F>& map, const Subspace<F>& target);

extern template class Subspace<PrimeField>;
extern template class Subspace<RationalField>;
extern template Subspace<PrimeField> kernel_basis(const Matrix<PrimeField>&);
extern template Subspace<RationalField> kernel_basis(const Matrix<RationalField>&);
extern template Subspace<PrimeField> preimage_under(const Matrix<PrimeField>&,
                                                    const Subspace<PrimeField>&);
extern template Subspace<RationalField> preimage_under(const Matrix<RationalField>&,
                                                       const Subspace<RationalField>&);

}  // namespace multlab
