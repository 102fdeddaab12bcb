#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multlab/chi.hpp"
#include "multlab/workspace.hpp"

namespace multlab {

/// [G_M(q)]_n = q^n M / q^(n+1) M.
struct GradedPiece {
  std::uint32_t degree = 0;
  std::size_t dim = 0;
  /// Representatives of a basis, as elements of A.
  std::vector<std::string> basis;
};

template <ExactField F>
GradedPiece graded_piece(Workspace<F>& ws, const std::vector<Polynomial<F>>& q, std::uint32_t n);

template <ExactField F>
struct QInitialForm {
  Polynomial<F> element;
  /// a lies in q^degree but not in q^(degree+1).
  std::uint32_t degree = 0;
  /// Set only for the zero polynomial.
  bool zero = false;
};

/// Initial degree of a with respect to q. Raises CeilingReached if a lies
/// in q^(ceiling+1).
template <ExactField F>
QInitialForm<F> initial_degree_q(Workspace<F>& ws, const std::vector<Polynomial<F>>& q,
                                 const Polynomial<F>& a, std::uint32_t ceiling = 16);

struct SopCheck {
  bool holds = false;
  /// Smallest k with q^n M = sum a_i q^(n-c_i) M for all n in (k, k + window].
  std::optional<std::uint32_t> onset;
  /// First and last n in the scanned range where the equality fails.
  std::optional<std::uint32_t> first_failure;
  std::optional<std::uint32_t> last_failure;
  std::uint32_t scanned_to = 0;
};

template <ExactField F>
SopCheck sop_check(Workspace<F>& ws, const KoszulSetup<F>& setup, std::uint32_t k_window = 6,
                   std::uint32_t k_ceiling = 16);

struct GregVerdict {
  std::string element;
  std::uint32_t initial_degree = 0;
  std::uint32_t bound = 0;
  /// Regular in every degree n <= bound.
  bool regular_up_to_bound = false;
  std::optional<std::uint32_t> failing_degree;
  /// Dimension of the kernel in the failing degree.
  std::size_t kernel_dim = 0;
  /// A class killed by multiplication, as an element of A.
  std::string witness;
};

/// Injectivity of a*: [G]_n -> [G]_(n+f) for n = 0..bound, where G is
/// G_M(q) modulo the initial forms of `previous`.
template <ExactField F>
GregVerdict greg_probe(Workspace<F>& ws, const std::vector<Polynomial<F>>& q,
                       const Polynomial<F>& a, std::uint32_t bound = 16,
                       const std::vector<Polynomial<F>>& previous = {});

/// Probes a_1*, ..., a_k* as a G_M(q)-regular sequence; stops at the first failure.
template <ExactField F>
std::vector<GregVerdict> greg_sequence(Workspace<F>& ws, const std::vector<Polynomial<F>>& q,
                                       const std::vector<Polynomial<F>>& a,
                                       std::uint32_t bound = 16);

struct ColonConstant {
  std::vector<long> n;
  std::vector<long long> values;
  long long constant = 0;
  /// ℓ(M/aM).
  long long length_quotient = 0;
  long long e0_q = 0;
  long long c_product = 1;
  bool identity_holds = false;
  /// Probe of the regular-sequence hypothesis on a_1..a_(d-1).
  std::vector<GregVerdict> hypothesis;
  bool hypothesis_holds = true;
};

struct ColonOptions {
  std::uint32_t window = 3;
  std::uint32_t max_scan = 30;
  std::uint32_t degree_bound = 16;
  /// Raise PreconditionFailed when the hypothesis probe fails.
  bool require_hypothesis = true;
  HilbertOptions hilbert;
};

/// ℓ((a', q^n)M :_M a_d / (a', q^(n-c_d))M) once constant in n, checked
/// against c e0(q; M) = ℓ(M/aM) - constant.
template <ExactField F>
ColonConstant colon_constant(Workspace<F>& ws, const KoszulSetup<F>& setup,
                             const ColonOptions& options = {});

/// Degree of the gcd of the initial forms of f and g (two-variable rings).
template <ExactField F>
std::uint32_t tangent_multiplicity(const Polynomial<F>& f, const Polynomial<F>& g);

#define MULTLAB_GRADED_EXTERN(F)                                                                   \
  extern template GradedPiece graded_piece(Workspace<F>&, const std::vector<Polynomial<F>>&,       \
                                           std::uint32_t);                                         \
  extern template struct QInitialForm<F>;                                                          \
  extern template QInitialForm<F> initial_degree_q(Workspace<F>&, const std::vector<Polynomial<F>>&, \
                                                   const Polynomial<F>&, std::uint32_t);           \
  extern template SopCheck sop_check(Workspace<F>&, const KoszulSetup<F>&, std::uint32_t,          \
                                     std::uint32_t);                                               \
  extern template GregVerdict greg_probe(Workspace<F>&, const std::vector<Polynomial<F>>&,         \
                                         const Polynomial<F>&, std::uint32_t,                      \
                                         const std::vector<Polynomial<F>>&);                       \
  extern template std::vector<GregVerdict> greg_sequence(                                          \
      Workspace<F>&, const std::vector<Polynomial<F>>&, const std::vector<Polynomial<F>>&,         \
      std::uint32_t);                                                                              \
  extern template ColonConstant colon_constant(Workspace<F>&, const KoszulSetup<F>&,               \
                                               const ColonOptions&);                               \
  extern template std::uint32_t tangent_multiplicity(const Polynomial<F>&, const Polynomial<F>&);
MULTLAB_GRADED_EXTERN(PrimeField)
MULTLAB_GRADED_EXTERN(RationalField)
#undef MULTLAB_GRADED_EXTERN

}  // namespace multlab
