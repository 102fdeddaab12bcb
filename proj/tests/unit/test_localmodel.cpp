#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../common/oracles.hpp"
#include "multlab/localmodel.hpp"
#include "multlab/parser.hpp"

using namespace multlab;

namespace {

const RingSpec kPlane = RingSpec::poly_local({"x", "y"});
const RingSpec kCurve = RingSpec::monomial_curve({4, 5, 11});

template <class F = PrimeField>
Polynomial<F> E(const RingSpec& r, const std::string& s, F k = F()) {
  return parse_element(r, s, k);
}

}  // namespace

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(RingSpec::monomial_curve({4, 6}), InputError);
  CHECK_THROWS_AS(RingSpec::monomial_curve({5, 4}), InputError);
  CHECK_THROWS_AS(RingSpec::poly_local({"x", "x"}), InputError);
  CHECK_THROWS_AS(RingSpec::poly_local({"2x"}), InputError);
  CHECK(kCurve.conductor() == 8);
  CHECK(kCurve.in_semigroup(11));
  CHECK_FALSE(kCurve.in_semigroup(7));
}

TEST_CASE("curve elements") {
  CHECK(E(kCurve, "u1*u2") == E(kCurve, "t^9"));
  CHECK(E(kCurve, "u3") == E(kCurve, "t^11"));
  CHECK_THROWS_AS(E(kCurve, "t^7"), InputError);
  CHECK(element_order(kCurve, E(kCurve, "t^5 + t^4")) == 4);
}

TEST_CASE("catalog counts match the oracles") {
  BasisCatalog plane(RingSpec::poly_local({"x", "y", "z"}));
  for (std::uint32_t n = 0; n < 9; ++n) CHECK(plane.dim_below(n) == oracle::poly_colength_of_power(3, n));
  BasisCatalog curve(kCurve);
  // Semigroup values below 12: 0 4 5 8 9 10 11.
  CHECK(curve.dim_below(12) == 7);
  CHECK(curve.label(3) == "t^8");
  CHECK(curve.index_of({7}) == -1);
}

TEST_CASE("lengths of monomial ideals agree with staircase counts") {
  PrimeField k;
  Workspace<PrimeField> ws(ring_module(kPlane, k));
  for (std::uint32_t a = 1; a <= 4; ++a)
    for (std::uint32_t b = 1; b <= 4; ++b) {
      auto& ladder = ws.ladder({E(kPlane, "x^" + std::to_string(a)), E(kPlane, "y^" + std::to_string(b))});
      for (std::uint32_t kpow = 1; kpow <= 4; ++kpow) {
        CHECK(ladder.length(kpow) == oracle::staircase(oracle::monomial_power(a, b, kpow)));
      }
    }
}

TEST_CASE("powers of the maximal ideal of the curve agree with semigroup counting") {
  PrimeField k;
  Workspace<PrimeField> ws(ring_module(kCurve, k));
  auto m = maximal_ideal_generators(kCurve, k);
  for (std::uint32_t n = 1; n <= 10; ++n) {
    CHECK(ws.ladder(m).length(n) == oracle::curve_colength_of_power({4, 5, 11}, n));
  }
  auto other = RingSpec::monomial_curve({3, 7});
  Workspace<PrimeField> w2(ring_module(other, k));
  for (std::uint32_t n = 1; n <= 8; ++n) {
    CHECK(w2.ladder(maximal_ideal_generators(other, k)).length(n) ==
          oracle::curve_colength_of_power({3, 7}, n));
  }
}

TEST_CASE("length of non-monomial quotients") {
  PrimeField k;
  Workspace<PrimeField> ws(ring_module(kPlane, k));
  // (y - x^2, y) = (y, x^2)
  CHECK(length_of_quotient(ws, {E(kPlane, "y - x^2"), E(kPlane, "y")}, 1).length == 2);
  // 1 + x is a unit
  CHECK(length_of_quotient(ws, {E(kPlane, "x + x^2"), E(kPlane, "y*(1 + x)")}, 1).length == 1);
  CHECK(length_of_quotient(ws, {E(kPlane, "y^2 - x^3"), E(kPlane, "y^2 - x^5")}, 1).length == 6);
  CHECK(length_of_quotient(ws, {E(kPlane, "1 + x")}, 1).length == 0);
}

TEST_CASE("ideals that are not primary to the maximal ideal are reported") {
  PrimeField k;
  Limits small;
  small.n_ceiling = 12;
  Workspace<PrimeField> ws(ring_module(kPlane, k), small);
  CHECK_THROWS_AS(length_of_quotient(ws, {E(kPlane, "x^2")}, 1), NonStabilizing);
}

TEST_CASE("modules with an annihilator") {
  PrimeField k;
  ModuleSpec<PrimeField> spec{kPlane, {E(kPlane, "x*y")}, k};
  Workspace<PrimeField> ws(spec);
  // A/(xy, x + y) = k[x]/(x^2)
  CHECK(length_of_quotient(ws, {E(kPlane, "x + y")}, 1).length == 2);
  CHECK_FALSE(annihilator_is_zero(ws, E(kPlane, "x")));
  CHECK(annihilator_is_zero(ws, E(kPlane, "x + y")));
  CHECK(annihilator_is_zero(ModuleSpec<PrimeField>{kPlane, {E(kPlane, "y^2")}, k}, E(kPlane, "x")));
  CHECK(annihilator_is_zero(ring_module(kPlane, k), E(kPlane, "x^3")));
  CHECK_FALSE(annihilator_is_zero(ring_module(kPlane, k), E(kPlane, "0")));
}

TEST_CASE("truncated model") {
  PrimeField k;
  auto model = build_model(ring_module(kCurve, k), 12);
  CHECK(model.dim() == 7);
  const auto& gens = model.generator_matrices();
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] * gens[1] == gens[1] * gens[0]);
  auto plane = build_model(ModuleSpec<PrimeField>{kPlane, {E(kPlane, "y^2 - x^3")}, k}, 6);
  // Monomials of degree < 6 minus multiples of y^2 of degree < 6.
  CHECK(plane.dim() == oracle::poly_colength_of_power(2, 6) - oracle::poly_colength_of_power(2, 4));
  auto sq = ideal_power_subspace(plane, {E(kPlane, "x"), E(kPlane, "y")}, 2);
  CHECK(plane.dim() - sq.dim() == 3);
}

TEST_CASE("membership and normal forms") {
  PrimeField k;
  Workspace<PrimeField> ws(ring_module(kPlane, k));
  const auto& I = ws.ladder({E(kPlane, "x^2"), E(kPlane, "y^3")}).power(2);
  CHECK(ws.contains(I, E(kPlane, "x^2*y^3")));
  CHECK_FALSE(ws.contains(I, E(kPlane, "x^3*y^2")));
  CHECK(ws.contains(I, E(kPlane, "x^4 + y^6")));
}

TEST_CASE("resource limit") {
  PrimeField k;
  Limits tiny;
  tiny.max_ambient = 50;
  Workspace<PrimeField> ws(ring_module(kPlane, k), tiny);
  CHECK_THROWS_AS(length_of_quotient(ws, {E(kPlane, "x^9"), E(kPlane, "y^9")}, 1), ResourceLimit);
}

TEST_CASE("rational backend") {
  RationalField q;
  Workspace<RationalField> ws(ring_module(kPlane, q));
  CHECK(length_of_quotient(ws, {E(kPlane, "3*y - x^2", q), E(kPlane, "y", q)}, 1).length == 2);
}
