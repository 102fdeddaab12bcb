#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "multlab/matrix.hpp"
#include "multlab/subspace.hpp"
#include "multlab/workspace.hpp"

namespace multlab {

/// The finite-dimensional algebra M/m^N M for M = A/J, in coordinates of
/// the monomials (semigroup values) of degree < N that are not leading
/// terms of J.
template <ExactField F>
class TruncatedModel {
 public:
  using value_type = typename F::value_type;
  using Row = std::vector<value_type>;

  TruncatedModel(std::shared_ptr<Workspace<F>> ws, std::uint32_t order);
  /// Non-owning: `ws` must outlive the model.
  TruncatedModel(Workspace<F>& ws, std::uint32_t order)
      : TruncatedModel(std::shared_ptr<Workspace<F>>(std::shared_ptr<void>(), &ws), order) {}

  const ModuleSpec<F>& spec() const { return ws_->spec(); }
  const F& field() const { return ws_->field(); }
  std::uint32_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }

  /// Ambient catalog indices of the model basis.
  const std::vector<std::size_t>& basis_indices() const noexcept { return basis_; }
  std::vector<std::string> basis_labels() const;
  std::vector<Exponents> basis_exponents() const;

  /// One matrix per ring variable (curves: per generator t^g_i).
  const std::vector<Matrix<F>>& generator_matrices() const noexcept { return generators_; }
  /// Matrix of multiplication by a; column c is the image of basis element c.
  Matrix<F> multiplication_matrix(const Polynomial<F>& a) const;

  Row element_vector(const Polynomial<F>& a) const;
  /// Model coordinates of an ambient vector (reduced modulo J).
  Row from_ambient(Row ambient) const;
  /// An ambient representative of model coordinates.
  Row to_ambient(const Row& coords) const;
  /// The element of A represented by model coordinates (terms of degree < N).
  Polynomial<F> to_polynomial(const Row& coords) const;

  Workspace<F>& workspace() const { return *ws_; }

 private:
  std::shared_ptr<Workspace<F>> ws_;
  std::uint32_t order_;
  std::size_t ambient_;
  SemiEchelon<F> j_;
  std::vector<std::size_t> basis_;
  std::vector<long> position_;  // ambient index -> model coordinate, -1 for J pivots
  std::vector<Matrix<F>> generators_;
};

template <ExactField F>
TruncatedModel<F> build_model(const ModuleSpec<F>& spec, std::uint32_t order, Limits limits = {});

/// Image of q^k M in the model; the whole space for k <= 0.
template <ExactField F>
Subspace<F> ideal_power_subspace(const TruncatedModel<F>& model,
                                 const std::vector<Polynomial<F>>& gens, long k);

/// {v : a v in W}.
template <ExactField F>
Subspace<F> colon_subspace(const TruncatedModel<F>& model, const Subspace<F>& w,
                           const Polynomial<F>& a);

struct LengthResult {
  std::size_t length = 0;
  /// m^tail M lies in q^k M (t-adic order for curves).
  std::uint32_t tail = 0;
  /// Truncation order at which the certificate was obtained.
  std::uint32_t certified_at = 0;
};

/// ℓ(M/q^k M), exact and certified.
template <ExactField F>
LengthResult length_of_quotient(Workspace<F>& ws, const std::vector<Polynomial<F>>& gens, long k);
template <ExactField F>
LengthResult length_of_quotient(const ModuleSpec<F>& spec, const std::vector<Polynomial<F>>& gens,
                                long k, Limits limits = {});

/// Whether 0 :_M a vanishes. Decided by comparing the colon (J + m^N) : a
/// with J modulo m^(N/2) at successive truncation orders N until two
/// consecutive verdicts agree.
template <ExactField F>
bool annihilator_is_zero(Workspace<F>& ws, const Polynomial<F>& a);
template <ExactField F>
bool annihilator_is_zero(const ModuleSpec<F>& spec, const Polynomial<F>& a, Limits limits = {});

#define MULTLAB_LOCALMODEL_EXTERN(F)                                                              \
  extern template class TruncatedModel<F>;                                                        \
  extern template TruncatedModel<F> build_model(const ModuleSpec<F>&, std::uint32_t, Limits);     \
  extern template Subspace<F> ideal_power_subspace(const TruncatedModel<F>&,                      \
                                                   const std::vector<Polynomial<F>>&, long);      \
  extern template Subspace<F> colon_subspace(const TruncatedModel<F>&, const Subspace<F>&,        \
                                             const Polynomial<F>&);                               \
  extern template LengthResult length_of_quotient(Workspace<F>&,                                  \
                                                  const std::vector<Polynomial<F>>&, long);       \
  extern template LengthResult length_of_quotient(const ModuleSpec<F>&,                           \
                                                  const std::vector<Polynomial<F>>&, long, Limits); \
  extern template bool annihilator_is_zero(Workspace<F>&, const Polynomial<F>&);                  \
  extern template bool annihilator_is_zero(const ModuleSpec<F>&, const Polynomial<F>&, Limits);
MULTLAB_LOCALMODEL_EXTERN(PrimeField)
MULTLAB_LOCALMODEL_EXTERN(RationalField)
#undef MULTLAB_LOCALMODEL_EXTERN

}  // namespace multlab
