#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "multlab/polynomial.hpp"

namespace multlab {

/// k[x_1..x_r] localized at the origin.
struct PolyLocal {
  std::vector<std::string> vars;
};

/// k[[t^g_1, ..., t^g_r]] with g_1 < ... < g_r and gcd 1.
struct MonomialCurve {
  std::vector<std::uint32_t> exponents;
};

class RingSpec {
 public:
  static RingSpec poly_local(std::vector<std::string> vars);
  static RingSpec monomial_curve(std::vector<std::uint32_t> exponents);

  bool is_curve() const noexcept { return std::holds_alternative<MonomialCurve>(kind_); }
  const PolyLocal& poly() const { return std::get<PolyLocal>(kind_); }
  const MonomialCurve& curve() const { return std::get<MonomialCurve>(kind_); }

  /// Variables of stored elements: the ring variables, or {"t"} for a curve.
  std::vector<std::string> element_vars() const;
  /// Names accepted in element text: the ring variables, or t, u1..ur for a curve.
  std::vector<std::string> input_vars() const;

  /// Largest gap of the value semigroup plus one (curves only; 0 otherwise).
  std::uint32_t conductor() const noexcept { return conductor_; }
  /// Smallest positive value of the maximal ideal (curves), 1 for PolyLocal.
  std::uint32_t min_generator_order() const;
  /// True when t^s lies in the ring (curves).
  bool in_semigroup(std::uint32_t s) const;

  std::string describe() const;
  bool operator==(const RingSpec& o) const;

 private:
  std::variant<PolyLocal, MonomialCurve> kind_;
  std::uint32_t conductor_ = 0;
  std::vector<bool> below_conductor_;  // semigroup membership for s < conductor
};

/// Parses an element of the ring. Curve elements may use t (exponents must
/// lie in the semigroup) and u_i standing for t^g_i.
template <ExactField F>
Polynomial<F> parse_element(const RingSpec& ring, std::string_view text, const F& field);

/// m-adic order of an element (t-adic order for curves); -1 for zero.
template <ExactField F>
long element_order(const RingSpec& ring, const Polynomial<F>& a);

/// Generators of the maximal ideal.
template <ExactField F>
std::vector<Polynomial<F>> maximal_ideal_generators(const RingSpec& ring, const F& field);

/// Cyclic module M = A/J.
template <ExactField F>
struct ModuleSpec {
  RingSpec ring;
  std::vector<Polynomial<F>> annihilator;
  F field;
};

template <ExactField F>
ModuleSpec<F> ring_module(const RingSpec& ring, const F& field) {
  return {ring, {}, field};
}

extern template Polynomial<PrimeField> parse_element(const RingSpec&, std::string_view,
                                                     const PrimeField&);
extern template Polynomial<RationalField> parse_element(const RingSpec&, std::string_view,
                                                        const RationalField&);
extern template long element_order(const RingSpec&, const Polynomial<PrimeField>&);
extern template long element_order(const RingSpec&, const Polynomial<RationalField>&);
extern template std::vector<Polynomial<PrimeField>> maximal_ideal_generators(const RingSpec&,
                                                                             const PrimeField&);
extern template std::vector<Polynomial<RationalField>> maximal_ideal_generators(
    const RingSpec&, const RationalField&);

}  // namespace multlab
