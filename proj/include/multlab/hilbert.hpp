#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multlab/workspace.hpp"

namespace multlab {

struct HilbertOptions {
  std::uint32_t n_max = 12;
  /// Automatic doubling of n_max stops here.
  std::uint32_t n_max_limit = 48;
  /// Entries at the end of a difference row that must agree.
  std::uint32_t window = 3;
  /// Forces the dimension instead of detecting it.
  std::optional<std::uint32_t> dimension;
};

/// Hilbert–Samuel function n -> ℓ(M/q^(n+1) M) with its forward differences.
struct HilbertTable {
  std::vector<std::string> generators;
  std::vector<std::size_t> values;                 // values[n], n = 0..n_max
  std::vector<std::vector<long long>> differences;  // differences[r] = r-th forward difference
  std::uint32_t dimension = 0;
  long long e0 = 0;
  /// First n from which the dimension-th difference row is constant.
  std::uint32_t stable_from = 0;
  std::uint32_t n_max = 0;
};

std::vector<std::vector<long long>> forward_differences(const std::vector<std::size_t>& values);

template <ExactField F>
HilbertTable hs_table(Workspace<F>& ws, const std::vector<Polynomial<F>>& q,
                      const HilbertOptions& options = {});
template <ExactField F>
HilbertTable hs_table(const ModuleSpec<F>& spec, const std::vector<Polynomial<F>>& q,
                      const HilbertOptions& options = {}, Limits limits = {});

/// e0(aA; M) for a system of parameters a of M.
template <ExactField F>
long long e0_of_parameters(Workspace<F>& ws, const std::vector<Polynomial<F>>& a,
                           const HilbertOptions& options = {});
template <ExactField F>
long long e0_of_parameters(const ModuleSpec<F>& spec, const std::vector<Polynomial<F>>& a,
                           const HilbertOptions& options = {}, Limits limits = {});

struct IdentityCheck {
  std::string name;
  std::string statement;
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
};

template <ExactField F>
struct IdentityRequest {
  std::vector<Polynomial<F>> a;
  /// a_1 = factor[0] * factor[1], enabling the additivity check.
  std::optional<std::pair<Polynomial<F>, Polynomial<F>>> factor;
  /// Exponents n_i, enabling the power check.
  std::vector<std::uint32_t> powers;
  /// Check e0(a; M) = e0(a'; M/a_1 M); needs 0 :_M a_1 = 0.
  bool quotient_check = true;
};

template <ExactField F>
std::vector<IdentityCheck> verify_multiplicity_identities(Workspace<F>& ws,
                                                          const IdentityRequest<F>& request,
                                                          const HilbertOptions& options = {});

#define MULTLAB_HILBERT_EXTERN(F)                                                                  \
  extern template HilbertTable hs_table(Workspace<F>&, const std::vector<Polynomial<F>>&,          \
                                        const HilbertOptions&);                                    \
  extern template HilbertTable hs_table(const ModuleSpec<F>&, const std::vector<Polynomial<F>>&,   \
                                        const HilbertOptions&, Limits);                            \
  extern template long long e0_of_parameters(Workspace<F>&, const std::vector<Polynomial<F>>&,     \
                                             const HilbertOptions&);                               \
  extern template long long e0_of_parameters(const ModuleSpec<F>&,                                 \
                                             const std::vector<Polynomial<F>>&,                    \
                                             const HilbertOptions&, Limits);                       \
  extern template std::vector<IdentityCheck> verify_multiplicity_identities(                       \
      Workspace<F>&, const IdentityRequest<F>&, const HilbertOptions&);
MULTLAB_HILBERT_EXTERN(PrimeField)
MULTLAB_HILBERT_EXTERN(RationalField)
#undef MULTLAB_HILBERT_EXTERN

}  // namespace multlab
