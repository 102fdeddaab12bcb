#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "multlab/ring.hpp"

namespace multlab {

/// Lazily enumerated monomial basis of a ring backend.
///
/// PolyLocal: monomials ordered by total degree, lexicographically
/// descending inside a degree. MonomialCurve: semigroup values in
/// increasing order. In both cases the first dim_below(N) elements form a
/// basis of the truncation A/m^N (for curves, of A modulo the series of
/// t-order >= N), so truncations are prefixes of each other.
class BasisCatalog {
 public:
  explicit BasisCatalog(RingSpec ring);

  const RingSpec& ring() const noexcept { return ring_; }

  /// Number of basis elements of degree (t-order for curves) below N.
  std::size_t dim_below(std::uint32_t n);
  std::uint32_t degree(std::size_t index) const { return degree_[index]; }
  const Exponents& exponents(std::size_t index) const { return exps_[index]; }
  std::string label(std::size_t index) const;

  /// Index of the basis element with exponent vector e (curves: {s});
  /// -1 when it is not a basis element. Extends the catalog as needed.
  long index_of(const Exponents& e);

  /// table[i] = index of basis_i * basis_j, for every i < dim_below(n);
  /// entries may point beyond dim_below(n) and must then be treated as zero.
  const std::vector<std::int32_t>& product_table(std::size_t j, std::uint32_t n);

 private:
  void extend_to(std::uint32_t n);

  RingSpec ring_;
  std::uint32_t enumerated_ = 0;  // every element of degree < enumerated_ is listed
  std::vector<Exponents> exps_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::size_t> degree_start_;  // degree_start_[d] = first index of degree d
  std::map<Exponents, std::size_t> index_;
  std::vector<std::int64_t> curve_index_;  // semigroup value -> index, -1 for gaps

  struct Table {
    std::uint32_t n = 0;
    std::vector<std::int32_t> entries;
  };
  std::unordered_map<std::size_t, Table> tables_;
};

}  // namespace multlab
