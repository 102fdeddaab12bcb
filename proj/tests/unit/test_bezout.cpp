#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../common/oracles.hpp"
#include "multlab/bezout.hpp"
#include "multlab/parser.hpp"

using namespace multlab;

namespace {

const PrimeField kF;
const std::vector<std::string> kXY = {"x", "y"};

Polynomial<PrimeField> P(const std::string& s) { return parse_polynomial(s, kXY, kF); }

oracle::Biv to_biv(const Polynomial<PrimeField>& f) {
  oracle::Biv b(kF.modulus());
  for (const auto& [e, c] : f.terms()) b.add(e[0], e[1], static_cast<std::int64_t>(c));
  return b;
}

}  // namespace

TEST_CASE("classical intersection numbers") {
  struct Case {
    const char* f;
    const char* g;
    std::size_t mu;
    std::uint32_t t;
  } cases[] = {
      {"y", "x", 1, 0},
      {"y^2 - x^3", "y", 3, 1},
      {"y^2 - x^3", "y^2 - x^5", 6, 2},
      {"y - x^2", "y", 2, 1},
      {"x*y", "x^2 - y^2", 4, 0},
      {"y^2 - x^2 - x^3", "y", 2, 0},
  };
  for (const auto& c : cases) {
    auto r = classify(P(c.f), P(c.g));
    CAPTURE(c.f);
    CAPTURE(c.g);
    CHECK(r.mu == c.mu);
    CHECK(r.t == c.t);
    CHECK(r.mu >= r.bound);
    CHECK(static_cast<long>(r.mu) == oracle::fulton(to_biv(P(c.f)), to_biv(P(c.g))));
    CHECK(r.equality == (r.mu == r.bound));
  }
}

TEST_CASE("transversal curves meet in the product of their orders") {
  auto r = classify(P("y^2 - x^2 - x^3"), P("y - 2*x + x^4"));
  CHECK(r.transversal);
  CHECK(r.mu == 2);
  CHECK(r.equality);
}

TEST_CASE("intersection multiplicity is symmetric") {
  CHECK(intersection_multiplicity(P("y^3 - x^7"), P("y^2 - x^3")) ==
        intersection_multiplicity(P("y^2 - x^3"), P("y^3 - x^7")));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(classify(P("1 + x"), P("y")), NotAtOrigin);
  CHECK_THROWS_AS(classify(P("0"), P("y")), CommonComponent);
  CHECK_THROWS_AS(classify(P("x*y"), P("x*(x - y)")), CommonComponent);
  // A shared factor away from the origin is harmless.
  CHECK(intersection_multiplicity(P("y*(1 + x)"), P("x*(1 + x)")) == 1);
}
