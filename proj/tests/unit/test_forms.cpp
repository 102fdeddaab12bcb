#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../common/oracles.hpp"
#include "multlab/graded.hpp"
#include "multlab/parser.hpp"

using namespace multlab;

namespace {

const PrimeField kF;
const RingSpec kPlane = RingSpec::poly_local({"x", "y"});
const RingSpec kCurve = RingSpec::monomial_curve({4, 5, 11});

Polynomial<PrimeField> E(const RingSpec& r, const std::string& s) { return parse_element(r, s, kF); }

}  // namespace

TEST_CASE("graded pieces telescope to the colength") {
  Workspace<PrimeField> ws(ring_module(kCurve, kF));
  auto m = maximal_ideal_generators(kCurve, kF);
  std::size_t total = 0;
  for (std::uint32_t n = 0; n < 8; ++n) {
    total += graded_piece(ws, m, n).dim;
    CHECK(total == oracle::curve_colength_of_power({4, 5, 11}, n + 1));
  }
  Workspace<PrimeField> wp(ring_module(kPlane, kF));
  auto g = graded_piece(wp, maximal_ideal_generators(kPlane, kF), 2);
  CHECK(g.dim == 3);
  CHECK(g.basis.size() == 3);
}

TEST_CASE("initial degree with respect to q") {
  Workspace<PrimeField> ws(ring_module(kPlane, kF));
  auto m = maximal_ideal_generators(kPlane, kF);
  CHECK(initial_degree_q(ws, m, E(kPlane, "y^2 - x^3")).degree == 2);
  CHECK(initial_degree_q(ws, m, E(kPlane, "3 + x")).degree == 0);
  CHECK(initial_degree_q(ws, m, E(kPlane, "0")).zero);
  std::vector<Polynomial<PrimeField>> q = {E(kPlane, "x^2"), E(kPlane, "y")};
  CHECK(initial_degree_q(ws, q, E(kPlane, "x^3")).degree == 1);
  CHECK(initial_degree_q(ws, q, E(kPlane, "x^4 + y^3")).degree == 2);
  CHECK_THROWS_AS(initial_degree_q(ws, m, E(kPlane, "x^20"), 16), CeilingReached);

  Workspace<PrimeField> wc(ring_module(kCurve, kF));
  auto mc = maximal_ideal_generators(kCurve, kF);
  CHECK(initial_degree_q(wc, mc, E(kCurve, "t^4")).degree == 1);
  CHECK(initial_degree_q(wc, mc, E(kCurve, "t^8")).degree == 2);
  CHECK(initial_degree_q(wc, mc, E(kCurve, "t^11")).degree == 1);
}

TEST_CASE("initial forms as parameters") {
  Workspace<PrimeField> ws(ring_module(kPlane, kF));
  auto m = maximal_ideal_generators(kPlane, kF);
  auto mono = sop_check(ws, make_setup(ws, m, {E(kPlane, "x^2"), E(kPlane, "y^3")}));
  CHECK(mono.holds);
  // Both initial forms are y.
  auto cusp = sop_check(ws, make_setup(ws, m, {E(kPlane, "y^2 - x^3"), E(kPlane, "y")}));
  CHECK_FALSE(cusp.holds);
  CHECK(cusp.last_failure.has_value());
}

TEST_CASE("initial form of t^4 on the curve") {
  // gr(A) = k[X,Y,Z]/(XZ, YZ, Y^4, Z^2) and X = (t^4)* leaves a finite-length quotient.
  Workspace<PrimeField> ws(ring_module(kCurve, kF));
  auto r = sop_check(ws, make_setup(ws, maximal_ideal_generators(kCurve, kF), {E(kCurve, "t^4")}));
  CHECK(r.holds);
  REQUIRE(r.onset.has_value());
  CHECK(*r.onset == 3);
}

TEST_CASE("regularity of initial forms") {
  Workspace<PrimeField> ws(ring_module(kPlane, kF));
  auto m = maximal_ideal_generators(kPlane, kF);
  CHECK(greg_probe(ws, m, E(kPlane, "y")).regular_up_to_bound);
  CHECK(greg_probe(ws, m, E(kPlane, "y - x^2")).regular_up_to_bound);
  auto seq = greg_sequence(ws, m, {E(kPlane, "y"), E(kPlane, "x^2")});
  REQUIRE(seq.size() == 2);
  CHECK(seq[1].regular_up_to_bound);

  Workspace<PrimeField> wc(ring_module(kCurve, kF));
  auto v = greg_probe(wc, maximal_ideal_generators(kCurve, kF), E(kCurve, "t^4"));
  CHECK_FALSE(v.regular_up_to_bound);
  REQUIRE(v.failing_degree.has_value());
  CHECK(*v.failing_degree == 1);
  CHECK(v.kernel_dim == 1);
  CHECK(v.witness == "t^11");
}

TEST_CASE("sequences stop at the first failure") {
  Workspace<PrimeField> ws(ring_module(kPlane, kF));
  auto seq = greg_sequence(ws, maximal_ideal_generators(kPlane, kF), {E(kPlane, "y^2"), E(kPlane, "y^3")});
  REQUIRE(seq.size() == 2);
  CHECK(seq[0].regular_up_to_bound);
  CHECK_FALSE(seq[1].regular_up_to_bound);
}

TEST_CASE("colon constant") {
  Workspace<PrimeField> ws(ring_module(kPlane, kF));
  auto m = maximal_ideal_generators(kPlane, kF);
  auto mono = colon_constant(ws, make_setup(ws, m, {E(kPlane, "y"), E(kPlane, "x^2")}));
  CHECK(mono.constant == 0);
  CHECK(mono.identity_holds);
  CHECK(mono.length_quotient == 2);

  auto pert = colon_constant(ws, make_setup(ws, m, {E(kPlane, "y - x^2"), E(kPlane, "y + x^2")}));
  CHECK(pert.constant == 1);
  CHECK(pert.identity_holds);
  CHECK(pert.length_quotient == 2);
}

TEST_CASE("colon hypothesis") {
  Workspace<PrimeField> wc(ring_module(kCurve, kF));
  auto setup = make_setup(wc, maximal_ideal_generators(kCurve, kF), {E(kCurve, "t^4"), E(kCurve, "t^5")});
  CHECK_THROWS_AS(colon_constant(wc, setup), PreconditionFailed);
  ColonOptions relaxed;
  relaxed.require_hypothesis = false;
  Workspace<PrimeField> wp(ring_module(kPlane, kF));
  auto m = maximal_ideal_generators(kPlane, kF);
  auto r = colon_constant(wp, make_setup(wp, m, {E(kPlane, "y"), E(kPlane, "x")}), relaxed);
  CHECK(r.hypothesis_holds);
  CHECK(r.constant == 0);
}

TEST_CASE("tangent multiplicity") {
  CHECK(tangent_multiplicity(E(kPlane, "y"), E(kPlane, "x")) == 0);
  CHECK(tangent_multiplicity(E(kPlane, "y^2 - x^3"), E(kPlane, "y")) == 1);
  CHECK(tangent_multiplicity(E(kPlane, "y^2 - x^3"), E(kPlane, "y^2 - x^5")) == 2);
  CHECK(tangent_multiplicity(E(kPlane, "x*y"), E(kPlane, "x^2 - y^2")) == 0);
}
