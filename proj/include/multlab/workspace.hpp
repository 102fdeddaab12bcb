#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multlab/catalog.hpp"
#include "multlab/echelon.hpp"
#include "multlab/ring.hpp"

namespace multlab {

struct Limits {
  /// Truncation ceiling for ideals not yet known to be m-primary.
  std::uint32_t n_ceiling = 64;
  /// Largest ambient truncation dimension ever materialized.
  std::size_t max_ambient = 12000;
};

/// An ideal I of A containing the annihilator J and a power of the maximal
/// ideal, stored through its image modulo that power.
///
/// Every ambient basis element with index >= tail_index lies in I; `rows`
/// is a semi-echelon basis of I modulo those, with entries below tail_index.
template <ExactField F>
struct CertifiedIdeal {
  /// Degree threshold: m^tail is contained in I (for curves: every series of t-order >= tail).
  std::uint32_t tail = 0;
  std::size_t tail_index = 0;
  std::vector<SparseRow<F>> rows;  // sorted by pivot
  std::vector<std::size_t> pivots;
  /// Truncation order at which the certificate was obtained.
  std::uint32_t certified_at = 0;

  std::size_t colength() const { return tail_index - rows.size(); }
};

/// multiplier * base, with base == nullptr meaning the whole ring.
template <ExactField F>
struct IdealTerm {
  Polynomial<F> multiplier;
  const CertifiedIdeal<F>* base = nullptr;
};

template <ExactField F>
class PowerLadder;

/// Shared state for computations on a fixed cyclic module M = A/J: the
/// basis catalog, cached images of J in truncations, and power ladders.
template <ExactField F>
class Workspace {
 public:
  using value_type = typename F::value_type;
  using Row = std::vector<value_type>;
  using Sparse = std::vector<std::pair<std::size_t, value_type>>;

  explicit Workspace(ModuleSpec<F> spec, Limits limits = {});
  ~Workspace();
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const ModuleSpec<F>& spec() const noexcept { return spec_; }
  const RingSpec& ring() const noexcept { return spec_.ring; }
  const F& field() const noexcept { return spec_.field; }
  const Limits& limits() const noexcept { return limits_; }
  BasisCatalog& catalog() noexcept { return catalog_; }

  /// dim A/m^N, raising ResourceLimit beyond the memory budget.
  std::size_t ambient_dim(std::uint32_t n);

  /// Terms of `a` of degree below N, as (basis index, coefficient).
  Sparse sparse(const Polynomial<F>& a, std::uint32_t n);
  Row dense(const Polynomial<F>& a, std::uint32_t n);
  /// a * v in A/m^N (v of length dim A/m^N).
  Row multiply(const Sparse& a, const Row& v, std::uint32_t n);
  Row multiply(const Sparse& a, const SparseRow<F>& v, std::uint32_t n);
  Row multiply_basis(const Sparse& a, std::size_t i, std::uint32_t n);

  /// Image of J in A/m^N.
  const SemiEchelon<F>& annihilator_image(std::uint32_t n);

  /// Image of J + sum of terms in A/m^N.
  SemiEchelon<F> ideal_image(const std::vector<IdealTerm<F>>& terms, std::uint32_t n);
  /// Spanning rows of a certified ideal in A/m^N.
  std::vector<Row> expand(const CertifiedIdeal<F>& ideal, std::uint32_t n);

  /// Smallest truncation order at which a tail threshold can be certified.
  std::uint32_t min_certifying_order(std::uint32_t tail) const;

  std::optional<CertifiedIdeal<F>> try_certify(const std::vector<IdealTerm<F>>& terms,
                                               std::uint32_t n);

  /// Certifies J + sum of terms. `bounded` applies the truncation ceiling
  /// (use it when the ideal might fail to be m-primary); otherwise only the
  /// memory budget limits the search. `upper`, when nonzero, is a
  /// truncation order known to certify.
  CertifiedIdeal<F> certify(const std::vector<IdealTerm<F>>& terms, std::uint32_t guess,
                            bool bounded, std::uint32_t upper = 0, const std::string& what = "");

  /// ℓ(A/(J + sum of terms)), certified.
  std::size_t colength(const std::vector<IdealTerm<F>>& terms, std::uint32_t guess = 0,
                       bool bounded = false);

  /// Membership of `a` in a certified ideal (exact).
  bool contains(const CertifiedIdeal<F>& ideal, const Polynomial<F>& a);
  /// Normal form of an ambient vector modulo a certified ideal, cut to tail_index entries.
  Row normal_form(const CertifiedIdeal<F>& ideal, Row v) const;

  /// Cached powers of the ideal generated by `gens` (plus J).
  PowerLadder<F>& ladder(const std::vector<Polynomial<F>>& gens);

  /// The whole ring as a certified ideal (tail 0).
  const CertifiedIdeal<F>& unit_ideal() const noexcept { return unit_; }

 private:
  ModuleSpec<F> spec_;
  Limits limits_;
  BasisCatalog catalog_;
  std::deque<std::pair<std::uint32_t, SemiEchelon<F>>> j_cache_;
  std::map<std::string, std::unique_ptr<PowerLadder<F>>> ladders_;
  CertifiedIdeal<F> unit_;
};

/// Powers q^k + J of a fixed ideal q, computed iteratively as
/// q^k = sum_i g_i q^(k-1) and certified one by one.
template <ExactField F>
class PowerLadder {
 public:
  PowerLadder(Workspace<F>& ws, std::vector<Polynomial<F>> gens);

  const std::vector<Polynomial<F>>& generators() const noexcept { return gens_; }
  /// q^k + J; k <= 0 gives the whole ring.
  const CertifiedIdeal<F>& power(long k);
  /// ℓ(M/q^k M); 0 for k <= 0.
  std::size_t length(long k) { return power(k).colength(); }

 private:
  Workspace<F>& ws_;
  std::vector<Polynomial<F>> gens_;
  std::uint32_t step_ = 2;
  std::deque<CertifiedIdeal<F>> powers_;  // powers_[k-1] = q^k; references stay valid
};

extern template class Workspace<PrimeField>;
extern template class Workspace<RationalField>;
extern template class PowerLadder<PrimeField>;
extern template class PowerLadder<RationalField>;

}  // namespace multlab
