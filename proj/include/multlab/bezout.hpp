#pragma once

#include <cstdint>
#include <string>

#include "multlab/workspace.hpp"

namespace multlab {

struct BezoutReport {
  std::string f;
  std::string g;
  /// m-adic orders of f and g.
  std::uint32_t c = 0;
  std::uint32_t d = 0;
  std::size_t mu = 0;
  /// Number of common tangents, with multiplicity.
  std::uint32_t t = 0;
  bool transversal = false;
  std::size_t bound = 0;  // c*d + t
  bool equality = false;
};

/// ℓ(A/(f, g)) for A = k[x, y] localized at the origin. Raises NotAtOrigin
/// and CommonComponent.
template <ExactField F>
std::size_t intersection_multiplicity(Workspace<F>& ws, const Polynomial<F>& f,
                                      const Polynomial<F>& g);
template <ExactField F>
std::size_t intersection_multiplicity(const Polynomial<F>& f, const Polynomial<F>& g,
                                      Limits limits = {});

/// Multiplicity, tangents and the c*d + t bound; raises PropertyViolation if the bound fails.
template <ExactField F>
BezoutReport classify(Workspace<F>& ws, const Polynomial<F>& f, const Polynomial<F>& g);
template <ExactField F>
BezoutReport classify(const Polynomial<F>& f, const Polynomial<F>& g, Limits limits = {});

#define MULTLAB_BEZOUT_EXTERN(F)                                                                 \
  extern template std::size_t intersection_multiplicity(Workspace<F>&, const Polynomial<F>&,     \
                                                        const Polynomial<F>&);                   \
  extern template std::size_t intersection_multiplicity(const Polynomial<F>&,                    \
                                                        const Polynomial<F>&, Limits);           \
  extern template BezoutReport classify(Workspace<F>&, const Polynomial<F>&,                     \
                                        const Polynomial<F>&);                                   \
  extern template BezoutReport classify(const Polynomial<F>&, const Polynomial<F>&, Limits);
MULTLAB_BEZOUT_EXTERN(PrimeField)
MULTLAB_BEZOUT_EXTERN(RationalField)
#undef MULTLAB_BEZOUT_EXTERN

}  // namespace multlab
