#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multlab/hilbert.hpp"
#include "multlab/workspace.hpp"

namespace multlab {

/// Parameters a_1..a_d of M with their initial degrees c_i with respect to q.
template <ExactField F>
struct KoszulSetup {
  std::vector<Polynomial<F>> q;
  std::vector<Polynomial<F>> a;
  std::vector<std::uint32_t> c;
  long long c_product = 1;

  std::uint32_t c_sum() const;
};

/// Computes the initial degrees c_i; raises CeilingReached when some a_i
/// seems to lie in every power of q, and InputError for a zero a_i.
template <ExactField F>
KoszulSetup<F> make_setup(Workspace<F>& ws, std::vector<Polynomial<F>> q,
                          std::vector<Polynomial<F>> a, std::uint32_t initial_ceiling = 16);

/// sum over subsets S of {1..d} of (-1)^|S| ℓ(M/q^(n - c_S) M), with
/// ℓ(M/q^k M) = 0 for k <= 0.
template <ExactField F>
long long chi_L(Workspace<F>& ws, const KoszulSetup<F>& setup, long n);

struct ChiOptions {
  /// Consecutive equal values of χ_K(n) required.
  std::uint32_t window = 3;
  /// Values of n scanned past the start before giving up.
  std::uint32_t max_scan = 30;
  HilbertOptions hilbert;
};

struct ChiReport {
  long n_from = 0;
  std::vector<long> n;
  std::vector<long long> chi_L;
  std::vector<long long> chi_K;
  long long chi = 0;
  long long e0_a = 0;
  long long e0_q = 0;
  long long c_product = 1;
  /// e0(a; M) - c_1...c_d e0(q; M).
  long long defect = 0;
};

/// Stabilized χ together with both multiplicities. Raises PropertyViolation
/// when χ disagrees with the defect and NegativeChi when χ < 0.
template <ExactField F>
ChiReport chi_defect(Workspace<F>& ws, const KoszulSetup<F>& setup, const ChiOptions& options = {});

#define MULTLAB_CHI_EXTERN(F)                                                                      \
  extern template struct KoszulSetup<F>;                                                           \
  extern template KoszulSetup<F> make_setup(Workspace<F>&, std::vector<Polynomial<F>>,             \
                                            std::vector<Polynomial<F>>, std::uint32_t);            \
  extern template long long chi_L(Workspace<F>&, const KoszulSetup<F>&, long);                     \
  extern template ChiReport chi_defect(Workspace<F>&, const KoszulSetup<F>&, const ChiOptions&);
MULTLAB_CHI_EXTERN(PrimeField)
MULTLAB_CHI_EXTERN(RationalField)
#undef MULTLAB_CHI_EXTERN

}  // namespace multlab
