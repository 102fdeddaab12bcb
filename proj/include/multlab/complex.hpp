#pragma once

#include <cstddef>
#include <vector>

#include "multlab/matrix.hpp"
#include "multlab/subspace.hpp"

namespace multlab {

/// Bounded complex 0 -> C_t -> ... -> C_1 -> C_0 -> 0 of finite-dimensional
/// spaces. boundary(i) is the dims[i-1] x dims[i] matrix of C_i -> C_(i-1);
/// vectors are columns.
template <ExactField F>
class ChainComplex {
 public:
  /// boundaries[k] is the map C_(k+1) -> C_k. Checks shapes and that consecutive maps compose to zero.
  ChainComplex(F field, std::vector<std::size_t> dims, std::vector<Matrix<F>> boundaries);

  const F& field() const noexcept { return field_; }
  /// Index of the top component (dims().size() - 1).
  std::size_t length() const noexcept { return dims_.size() - 1; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  /// Dimension of C_i, 0 outside the range.
  std::size_t dim(long i) const;
  /// C_i -> C_(i-1); a zero matrix of the right shape outside 1..length().
  Matrix<F> boundary(long i) const;

  Subspace<F> cycles(long i) const;
  Subspace<F> boundaries(long i) const;

 private:
  F field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix<F>> boundaries_;
};

/// Degreewise maps f_i: X_i -> Y_i commuting with the boundaries.
template <ExactField F>
struct ChainMap {
  ChainMap(ChainComplex<F> source, ChainComplex<F> target, std::vector<Matrix<F>> components);

  ChainComplex<F> source;
  ChainComplex<F> target;
  /// f_i for i = 0..max(source.length(), target.length()).
  std::vector<Matrix<F>> components;

  Matrix<F> at(long i) const;
};

template <ExactField F>
ChainMap<F> identity_map(const ChainComplex<F>& c);

/// Koszul complex of commuting operators a_1..a_t on V: C_i = Λ^i k^t ⊗ V
/// with e_J ⊗ v -> sum_k (-1)^(k+1) e_(J minus j_k) ⊗ a_(j_k) v. Subsets J
/// are ordered lexicographically.
template <ExactField F>
ChainComplex<F> koszul_complex(const std::vector<Matrix<F>>& ops);

/// The chain endomorphism of koszul_complex(ops) induced by an operator b on V (id ⊗ b).
template <ExactField F>
ChainMap<F> koszul_action(const ChainComplex<F>& koszul, std::size_t t, const Matrix<F>& b);

/// C_i = X_(i-1) ⊕ Y_i with ∂(x, y) = (d x, d y + (-1)^(i-1) f x).
template <ExactField F>
ChainComplex<F> mapping_cone(const ChainMap<F>& f);

template <ExactField F>
std::vector<std::size_t> homology_dims(const ChainComplex<F>& c);

struct EulerCharacteristic {
  long long from_homology = 0;
  long long from_components = 0;
};

/// Both alternating sums; raises PropertyViolation if they differ.
template <ExactField F>
EulerCharacteristic euler_characteristic(const ChainComplex<F>& c);
template <ExactField F>
long long euler_char(const ChainComplex<F>& c) {
  return euler_characteristic(c).from_homology;
}

/// Whether f induces the zero map H_i(source) -> H_i(target).
template <ExactField F>
bool induced_map_is_zero(const ChainMap<F>& f, long i);

#define MULTLAB_COMPLEX_EXTERN(F)                                                               \
  extern template class ChainComplex<F>;                                                        \
  extern template struct ChainMap<F>;                                                           \
  extern template ChainMap<F> identity_map(const ChainComplex<F>&);                             \
  extern template ChainComplex<F> koszul_complex(const std::vector<Matrix<F>>&);                \
  extern template ChainMap<F> koszul_action(const ChainComplex<F>&, std::size_t,                \
                                            const Matrix<F>&);                                  \
  extern template ChainComplex<F> mapping_cone(const ChainMap<F>&);                             \
  extern template std::vector<std::size_t> homology_dims(const ChainComplex<F>&);               \
  extern template EulerCharacteristic euler_characteristic(const ChainComplex<F>&);             \
  extern template bool induced_map_is_zero(const ChainMap<F>&, long);
MULTLAB_COMPLEX_EXTERN(PrimeField)
MULTLAB_COMPLEX_EXTERN(RationalField)
#undef MULTLAB_COMPLEX_EXTERN

}  // namespace multlab
