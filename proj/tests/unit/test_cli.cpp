#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multlab/commands.hpp"
#include "multlab/problem.hpp"

using namespace multlab;

namespace {

const char* kCurveText = R"(# curve
a = ["t^4"]

[ring]
kind = "monomial-curve"
exponents = [4, 5, 11]
)";

const char* kPlaneText = R"(
[ring]
kind = "poly-local"
vars = ["x",
        "y"]

[module]
annihilator = []

[options]
n_max = 1_0
)";

ProblemFile plane_with(std::vector<std::string> a) {
  auto p = parse_problem(kPlaneText);
  p.a = std::move(a);
  return p;
}

}  // namespace

TEST_CASE("problem files") {
  auto p = parse_problem(kCurveText);
  CHECK(p.ring_kind == "monomial-curve");
  CHECK(p.exponents == std::vector<std::uint32_t>{4, 5, 11});
  CHECK(p.a == std::vector<std::string>{"t^4"});
  CHECK(p.field == "fp:32003");

  auto q = parse_problem(kPlaneText);
  CHECK(q.vars == std::vector<std::string>{"x", "y"});
  CHECK(q.options.at("n_max") == 10);
  CHECK(q.option("n_max", 12) == 10);
  CHECK(q.option("hs_window", 3) == 3);
}

TEST_CASE("dotted keys and escapes") {
  auto p = parse_problem("ring.kind = \"poly-local\"\nring.vars = [\"x\"]\nfield = \"rational\"\nq = [\"x\", \"y\\t\"]\n");
  CHECK(p.field == "rational");
  CHECK(p.q[1] == "y\t");
}

TEST_CASE("malformed problem files") {
  CHECK_THROWS_AS(parse_problem("a = [\"x\"]\n"), InputError);  // no ring.kind
  CHECK_THROWS_AS(parse_problem("[ring]\nkind = \"poly-local\"\nvars = [\"x\"]\ncolour = 1\n"), InputError);
  CHECK_THROWS_AS(parse_problem("[ring]\nkind = \"poly-local\"\nkind = \"poly-local\"\n"), InputError);
  CHECK_THROWS_AS(parse_problem("[ring]\nkind = \"poly-local\"\nvars = [\"x\"\n"), InputError);
  CHECK_THROWS_AS(parse_problem("[ring]\nkind = \"torus\"\n").ring(), InputError);
  CHECK_THROWS_AS(parse_problem("[ring]\nkind = \"poly-local\"\nvars = [\"x\"]\n[options]\nwibble = 3\n"),
                  InputError);
  try {
    parse_problem("[ring]\nkind = \"poly-local\"\nvars = [\"x\"]\nq = [1, \n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}

TEST_CASE("option bounds") {
  auto p = parse_problem("[ring]\nkind = \"poly-local\"\nvars = [\"x\"]\n[options]\nn_max = 0\n");
  CHECK_THROWS_AS(p.option("n_max", 12, 1, 100), InputError);
}

TEST_CASE("canonical text round-trips") {
  for (const char* text : {kCurveText, kPlaneText}) {
    auto p = parse_problem(text);
    auto again = parse_problem(to_text(p));
    CHECK(to_text(again) == to_text(p));
    CHECK(again.vars == p.vars);
    CHECK(again.options == p.options);
  }
}

TEST_CASE("reports carry the schema fields") {
  auto rep = run("chi", parse_problem(kCurveText), RunOptions{std::nullopt, 5, false});
  CHECK(rep.exit_code == 0);
  const auto& d = rep.doc;
  CHECK(d["schema"] == kReportSchema);
  CHECK(d["command"] == "chi");
  CHECK(d["status"] == "ok");
  CHECK(d["seed"] == 5);
  CHECK(d["result"]["chi"] == 0);
  CHECK_FALSE(d.contains("timing_ms"));
  CHECK(render_text(d).find("chi: 0") != std::string::npos);
}

TEST_CASE("every command runs on a small problem") {
  auto p = plane_with({"x^2", "y + x^3"});
  p.factor = {"x", "x"};
  p.powers = {2, 3};
  for (const auto& c : command_names()) {
    CAPTURE(c);
    auto rep = run(c, p);
    CHECK(rep.exit_code == 0);
    CHECK(rep.doc.contains("result"));
  }
}

TEST_CASE("field override") {
  auto rep = run("e0", plane_with({"x^2", "y^3"}), RunOptions{std::string("rational"), 0, false});
  CHECK(rep.doc["field"] == "rational");
  CHECK(rep.doc["result"]["e0"] == 6);
  CHECK_THROWS_AS(run("e0", plane_with({"x"}), RunOptions{std::string("fp:12"), 0, false}), InputError);
}

TEST_CASE("errors map to exit codes") {
  CHECK_THROWS_AS(run("e0", plane_with({"x*z"})), UnknownVariable);
  CHECK_THROWS_AS(run("e0", plane_with({"x^2"})), NotSystemOfParameters);
  CHECK_THROWS_AS(run("bezout", plane_with({"x"})), InputError);
  CHECK_THROWS_AS(run("frobnicate", plane_with({"x"})), InputError);
  try {
    run("bezout", plane_with({"1 + x", "y"}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(exit_code_for(e) == 2);
    auto doc = error_report("bezout", e);
    CHECK(doc["status"] == "error");
    CHECK(doc["error"]["exit_code"] == 2);
  }
}

TEST_CASE("quotient check is skipped for zero divisors") {
  auto p = plane_with({"x", "y"});
  p.annihilator = {"x*y"};
  p.a = {"x + y"};
  auto rep = run("verify-identities", p);
  CHECK(rep.exit_code == 0);
  CHECK_FALSE(rep.doc["result"].contains("quotient_skipped"));
  // y is a parameter of A/(x^2, xy) but kills x.
  p.annihilator = {"x^2", "x*y"};
  p.a = {"y"};
  rep = run("verify-identities", p);
  CHECK(rep.exit_code == 0);
  CHECK(rep.doc["result"].contains("quotient_skipped"));
  p.annihilator = {"x*y"};
  p.a = {"x"};
  CHECK_THROWS_AS(run("verify-identities", p), NotSystemOfParameters);
}
