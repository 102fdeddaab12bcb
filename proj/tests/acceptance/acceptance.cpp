// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any line fails.
//
// Random suites are generated once from fixed seeds as element text and then
// evaluated over both backends; criterion 9 compares the integer results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "../common/generators.hpp"
#include "../common/oracles.hpp"
#include "multlab/commands.hpp"
#include "multlab/complex.hpp"
#include "multlab/graded.hpp"
#include "multlab/localmodel.hpp"
#include "multlab/parser.hpp"
#include "multlab/problem.hpp"

using namespace multlab;
using Json = nlohmann::ordered_json;

namespace {

const char* kPrime = "fp:32003";
const char* kRational = "rational";

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<long long> ints;  // every integer result, for the backend comparison

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

ProblemFile plane(std::vector<std::string> q, std::vector<std::string> a, const std::string& field) {
  ProblemFile p;
  p.ring_kind = "poly-local";
  p.vars = {"x", "y"};
  p.q = std::move(q);
  p.a = std::move(a);
  p.field = field;
  return p;
}

ProblemFile with_field(ProblemFile p, const std::string& field) {
  p.field = field;
  return p;
}

long long as_int(const Json& j) { return j.get<long long>(); }

// ---------------------------------------------------------------------------
// 1. The curve k[[t^4, t^5, t^11]] with a = t^4.

struct CurveResults {
  Outcome values;  // lengths, multiplicities, c and chi
  Outcome greg;
  Outcome sop;
};

template <ExactField F>
CurveResults criterion_1(const F& field) {
  CurveResults r;
  const auto ring = RingSpec::monomial_curve({4, 5, 11});
  Workspace<F> ws(ring_module(ring, field));
  const auto m = maximal_ideal_generators(ring, field);
  const auto a = parse_element(ring, "t^4", field);

  const auto length = static_cast<long long>(length_of_quotient(ws, {a}, 1).length);
  const long long e0a = e0_of_parameters(ws, {a});
  const long long e0m = hs_table(ws, m).e0;
  const auto setup = make_setup(ws, m, {a});
  const ChiReport chi = chi_defect(ws, setup);
  std::ostringstream d;
  d << "l(A/aA)=" << length << " e0(a)=" << e0a << " e0(m)=" << e0m << " c=" << setup.c[0]
    << " chi=" << chi.chi;
  r.values.detail = d.str();
  r.values.require(length == 4 && e0a == 4 && e0m == 4 && setup.c[0] == 1 && chi.chi == 0, d.str());
  r.values.ints = {length, e0a, e0m, setup.c[0], chi.chi};

  const GregVerdict g = greg_probe(ws, m, a);
  std::ostringstream gd;
  if (g.regular_up_to_bound) {
    gd << "regular up to degree " << g.bound;
  } else {
    gd << "fails in degree " << *g.failing_degree << ", kernel dim " << g.kernel_dim << ", witness "
       << g.witness;
  }
  r.greg.detail = gd.str();
  r.greg.require(!g.regular_up_to_bound && g.failing_degree == 1u, gd.str());
  r.greg.ints = {g.regular_up_to_bound, g.failing_degree.value_or(0), static_cast<long long>(g.kernel_dim)};

  const SopCheck s = sop_check(ws, setup);
  std::ostringstream sd;
  sd << "expected false; computed holds=" << (s.holds ? "true" : "false");
  if (s.onset) sd << " with onset k=" << *s.onset;
  sd << " (X = (t^4)* has G/XG of finite length in G = k[X,Y,Z]/(XZ,YZ,Y^4,Z^2))";
  r.sop.detail = sd.str();
  r.sop.require(!s.holds, sd.str());
  r.sop.ints = {s.holds, s.onset.value_or(0)};
  return r;
}

// ---------------------------------------------------------------------------
// 2-4. Stabilization, non-negativity and the sop consequence on random setups.

struct ChiInstance {
  std::vector<std::string> q;
  std::vector<std::string> a;
  long long e0_a = 0;  // known by construction
  long long e0_q = 0;
};

std::vector<ChiInstance> chi_suite() {
  gen::Rng rng(20240521);
  std::vector<ChiInstance> out;
  for (int k = 0; k < 24; ++k) {
    const auto pair = gen::weighted_pair(rng, 4, 6);
    const auto q = k % 2 == 0 ? gen::MonomialQ{{"x", "y"}, 1} : gen::monomial_q(rng);
    out.push_back({q.gens, pair.a, pair.length, q.e0});
  }
  return out;
}

struct ChiResults {
  Outcome stabilization;
  Outcome nonnegative;
  Outcome sop_zero;
  int sop_passing = 0;
};

ChiResults criteria_2_to_4(const std::vector<ChiInstance>& suite, const std::string& field) {
  ChiResults r;
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const auto& inst = suite[k];
    const std::string tag = "instance " + std::to_string(k) + " (" + inst.a[0] + ", " + inst.a[1] + ")";
    try {
      const Report chi = run("chi", plane(inst.q, inst.a, field));
      const Json& res = chi.doc["result"];
      const long long value = as_int(res["chi"]);
      const auto chi_k = res["chi_K"].get<std::vector<long long>>();
      const bool window = chi_k.size() >= 3 &&
                          std::all_of(chi_k.end() - 3, chi_k.end(), [&](long long v) { return v == value; });
      const bool formula = value == as_int(res["e0_a"]) - as_int(res["c_product"]) * as_int(res["e0_q"]);
      const bool oracle = as_int(res["e0_a"]) == inst.e0_a && as_int(res["e0_q"]) == inst.e0_q;
      r.stabilization.require(chi.exit_code == 0 && window && formula && oracle, tag);
      r.nonnegative.require(chi.exit_code == 0 && value >= 0, tag + ": chi=" + std::to_string(value));
      const Report sop = run("sop-check", plane(inst.q, inst.a, field));
      const bool holds = sop.doc["result"]["holds"].get<bool>();
      if (holds) {
        ++r.sop_passing;
        r.sop_zero.require(value == 0, tag + ": sop holds but chi=" + std::to_string(value));
      }
      r.stabilization.ints.insert(r.stabilization.ints.end(), {value, as_int(res["e0_a"]), as_int(res["e0_q"]),
                                                              as_int(res["c_product"]), holds});
    } catch (const NegativeChi& e) {
      r.nonnegative.fail(tag + ": " + e.what() + " (exit " + std::to_string(exit_code_for(e)) + ")");
    } catch (const Error& e) {
      r.stabilization.fail(tag + ": " + e.what());
    }
  }
  r.stabilization.detail = r.stabilization.pass ? std::to_string(suite.size()) + " setups" : r.stabilization.detail;
  r.nonnegative.detail = r.nonnegative.pass ? "chi >= 0 on all " + std::to_string(suite.size()) : r.nonnegative.detail;
  if (r.sop_zero.pass) r.sop_zero.detail = std::to_string(r.sop_passing) + " setups pass sop_check, all with chi = 0";
  r.sop_zero.require(r.sop_passing > 0, "no instance passed sop_check");
  return r;
}

// ---------------------------------------------------------------------------
// 5. Multiplicity identities.

struct IdentityInstance {
  std::vector<std::string> annihilator;
  std::vector<std::string> a;
  std::vector<std::string> factor;
};

std::vector<IdentityInstance> additivity_suite() {
  gen::Rng rng(5150);
  std::vector<IdentityInstance> out;
  for (int k = 0; k < 12; ++k) {
    auto f = gen::weighted_pair(rng, 2, 4, 1);
    auto g = gen::weighted_pair(rng, 2, 4, 1);
    // a1 = f1 * g1; a2 = y^j + h with the larger weight pattern.
    out.push_back({{}, {"(" + f.a[0] + ")*(" + g.a[0] + ")", k % 2 ? f.a[1] : g.a[1]}, {f.a[0], g.a[0]}});
  }
  return out;
}

std::vector<IdentityInstance> quotient_suite() {
  gen::Rng rng(6160);
  std::vector<IdentityInstance> out;
  for (int k = 0; k < 8; ++k) out.push_back({{}, gen::weighted_pair(rng, 3, 5).a, {}});
  // One-dimensional modules A/(f): a single parameter.
  out.push_back({{"y^2 - x^3"}, {"x"}, {}});
  out.push_back({{"y^2 - x^3"}, {"y + x^2"}, {}});
  out.push_back({{"x*y"}, {"x + y"}, {}});
  out.push_back({{"y^3 - x^5"}, {"x - y"}, {}});
  return out;
}

Outcome criterion_5(const std::vector<IdentityInstance>& additivity, const std::vector<IdentityInstance>& quotient,
                    const std::string& field) {
  Outcome o;
  int grid = 0;
  for (int n1 = 1; n1 <= 5; ++n1)
    for (int n2 = 1; n2 <= 5; ++n2) {
      const Report rep = run("e0", plane({}, {"x^" + std::to_string(n1), "y^" + std::to_string(n2)}, field));
      const long long e = as_int(rep.doc["result"]["e0"]);
      o.require(e == n1 * n2, "e0(x^" + std::to_string(n1) + ", y^" + std::to_string(n2) + ") = " + std::to_string(e));
      o.ints.push_back(e);
      ++grid;
    }

  auto run_identities = [&](const IdentityInstance& inst, const std::string& want, int& count) {
    ProblemFile p = plane({}, inst.a, field);
    p.annihilator = inst.annihilator;
    p.factor = inst.factor;
    try {
      const Report rep = run("verify-identities", p);
      const Json& res = rep.doc["result"];
      bool seen = false;
      for (const auto& c : res["checks"]) {
        o.ints.push_back(as_int(c["lhs"]));
        o.ints.push_back(as_int(c["rhs"]));
        if (c["name"] == want) {
          seen = true;
          o.require(c["pass"].get<bool>(), want + " fails on (" + inst.a[0] + ", ...): " + c["statement"].get<std::string>());
        }
      }
      o.require(rep.exit_code == 0, want + " instance exit code " + std::to_string(rep.exit_code));
      if (seen) ++count;
    } catch (const Error& e) {
      o.fail(want + " instance (" + inst.a[0] + "): " + e.what());
    }
  };
  int add = 0, quo = 0;
  for (const auto& inst : additivity) run_identities(inst, "additivity", add);
  for (const auto& inst : quotient) {
    ProblemFile p = plane({}, inst.a, field);
    p.annihilator = inst.annihilator;
    const bool nzd = std::visit(
        [&](const auto& k) {
          using F = std::decay_t<decltype(k)>;
          ModuleSpec<F> spec{p.ring(), {}, k};
          for (const auto& t : p.annihilator) spec.annihilator.push_back(parse_element(spec.ring, t, k));
          return annihilator_is_zero(spec, parse_element(spec.ring, inst.a[0], k));
        },
        parse_field(field));
    o.require(nzd, "annihilator of " + inst.a[0] + " is nonzero");
    run_identities(inst, "quotient", quo);
  }
  o.require(add >= 10, "only " + std::to_string(add) + " additivity instances");
  o.require(quo >= 10, "only " + std::to_string(quo) + " quotient instances");
  if (o.pass) {
    o.detail = std::to_string(grid) + " grid values, " + std::to_string(add) + " additivity, " +
               std::to_string(quo) + " quotient instances";
  }
  return o;
}

// ---------------------------------------------------------------------------
// 6. Local Bezout.

struct BezoutCase {
  std::string f, g;
  long expected_mu = -1;  // from Fulton's algorithm over F_p
};

std::vector<BezoutCase> bezout_suite() {
  std::vector<BezoutCase> out = {{"x", "y", 1}, {"y - x^2", "y", 2}, {"y^2 - x^3", "y", 3}, {"y^2 - x^3", "y^2 - x^5", 6}};
  gen::Rng rng(6006);
  const PrimeField k;
  const std::vector<std::string> xy = {"x", "y"};
  int random = 0;
  while (random < 24) {
    BezoutCase c{gen::curve_through_origin(rng, 5, 3), gen::curve_through_origin(rng, 5, 3)};
    auto to_biv = [&](const std::string& s) {
      oracle::Biv b(k.modulus());
      const auto poly = parse_polynomial(s, xy, k);
      for (const auto& [e, v] : poly.terms()) b.add(e[0], e[1], v);
      return b;
    };
    c.expected_mu = oracle::fulton(to_biv(c.f), to_biv(c.g));
    if (c.expected_mu < 0) continue;  // common component through the origin
    out.push_back(c);
    ++random;
  }
  return out;
}

Outcome criterion_6(const std::vector<BezoutCase>& suite, const std::string& field) {
  Outcome o;
  // Fixed cases: (mu, c*d + t) as stated.
  const std::pair<long long, long long> fixed[] = {{1, 1}, {2, 2}, {3, 3}, {6, 6}};
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const auto& c = suite[k];
    const std::string tag = "(" + c.f + ", " + c.g + ")";
    try {
      const Report rep = run("bezout", plane({}, {c.f, c.g}, field));
      const Json& res = rep.doc["result"];
      const long long mu = as_int(res["mu"]);
      const long long bound = as_int(res["bound"]);
      o.require(mu >= bound, tag + ": mu < cd + t");
      o.require(res["chi_consistent"].get<bool>(), tag + ": mu - cd differs from chi");
      o.require(mu == c.expected_mu, tag + ": mu=" + std::to_string(mu) + ", Fulton gives " + std::to_string(c.expected_mu));
      if (k < 4) o.require(mu == fixed[k].first && bound == fixed[k].second, tag + ": fixed value mismatch");
      o.ints.insert(o.ints.end(), {mu, as_int(res["c"]), as_int(res["d"]), as_int(res["t"]), as_int(res["chi"])});
    } catch (const Error& e) {
      o.fail(tag + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "4 fixed + " + std::to_string(suite.size() - 4) + " random pairs";
  return o;
}

// ---------------------------------------------------------------------------
// 7. Colon constants.

std::vector<ProblemFile> colon_suite() {
  std::vector<ProblemFile> out;
  for (const char* name : {"colon_monomial.toml", "colon_perturbed.toml", "curve_4_5_11.toml"}) {
    out.push_back(load_problem(std::string(MULTLAB_PROBLEMS) + "/" + name));
  }
  gen::Rng rng(7007);
  for (int k = 0; k < 20; ++k) {
    const auto pair = gen::weighted_pair(rng, 3, 5);
    out.push_back(plane(k % 3 == 0 ? gen::monomial_q(rng).gens : std::vector<std::string>{}, pair.a, kPrime));
  }
  return out;
}

Outcome criterion_7(const std::vector<ProblemFile>& suite, const std::string& field) {
  Outcome o;
  int random_passing = 0;
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const ProblemFile p = with_field(suite[k], field);
    const std::string tag = "instance " + std::to_string(k) + " (" + (p.a.empty() ? "" : p.a[0]) + ")";
    try {
      const Report rep = run("colon-const", p);
      const Json& res = rep.doc["result"];
      const bool hyp = res["hypothesis_holds"].get<bool>();
      if (k < 3) {
        o.require(hyp, tag + ": shipped example fails the hypothesis");
      } else if (hyp) {
        ++random_passing;
      }
      if (!hyp) continue;
      const long long lhs = as_int(res["c_product"]) * as_int(res["e0_q"]);
      const long long rhs = as_int(res["length_quotient"]) - as_int(res["constant"]);
      o.require(res["identity_holds"].get<bool>() && lhs == rhs, tag + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
      o.ints.insert(o.ints.end(), {as_int(res["constant"]), as_int(res["length_quotient"]), lhs});
    } catch (const Error& e) {
      o.fail(tag + ": " + e.what());
    }
  }
  o.require(random_passing >= 10, "only " + std::to_string(random_passing) + " random instances pass greg_probe");
  if (o.pass) o.detail = "3 shipped examples + " + std::to_string(random_passing) + " random instances";
  return o;
}

// ---------------------------------------------------------------------------
// 8. Koszul core on random finite-dimensional instances.

struct KoszulInstance {
  // Either operators p_k(B) for one integer matrix B, or multiplication by
  // elements on a truncated model of A/(annihilator).
  std::vector<std::vector<long long>> b;
  std::vector<std::vector<long long>> coeffs;
  std::vector<std::string> annihilator;
  std::vector<std::string> elements;
  std::uint32_t order = 0;
};

std::vector<KoszulInstance> koszul_suite() {
  gen::Rng rng(8008);
  std::vector<KoszulInstance> out;
  for (int k = 0; k < 40; ++k) {
    KoszulInstance inst;
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    inst.b = gen::int_matrix(rng, n, n);
    const long count = gen::uniform(rng, 1, 3);
    for (long j = 0; j < count; ++j) {
      inst.coeffs.push_back({gen::uniform(rng, -2, 2), gen::uniform(rng, -2, 2), gen::uniform(rng, -2, 2)});
    }
    out.push_back(inst);
  }
  for (int k = 0; k < 16; ++k) {
    KoszulInstance inst;
    inst.annihilator = {gen::curve_through_origin(rng, 3, 2)};
    const long count = gen::uniform(rng, 1, 3);
    for (long j = 0; j < count; ++j) inst.elements.push_back(gen::curve_through_origin(rng, 3, 2));
    inst.order = static_cast<std::uint32_t>(gen::uniform(rng, 2, 4));
    out.push_back(inst);
  }
  return out;
}

template <ExactField F>
std::vector<Matrix<F>> koszul_operators(const KoszulInstance& inst, const F& field) {
  std::vector<Matrix<F>> ops;
  if (inst.order == 0) {
    const auto b = Matrix<F>::from_ints(field, inst.b);
    const std::size_t n = b.rows();
    for (const auto& c : inst.coeffs) {
      Matrix<F> op(field, n, n);
      Matrix<F> power = Matrix<F>::identity(field, n);
      for (long long ck : c) {
        op = op + power.scaled(field.from_int(ck));
        power = power * b;
      }
      ops.push_back(op);
    }
    return ops;
  }
  const auto ring = RingSpec::poly_local({"x", "y"});
  ModuleSpec<F> spec{ring, {}, field};
  for (const auto& t : inst.annihilator) spec.annihilator.push_back(parse_element(ring, t, field));
  const auto model = build_model(spec, inst.order);
  for (const auto& t : inst.elements) ops.push_back(model.multiplication_matrix(parse_element(ring, t, field)));
  return ops;
}

template <ExactField F>
Outcome criterion_8(const std::vector<KoszulInstance>& suite, const F& field) {
  Outcome o;
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const std::string tag = "instance " + std::to_string(k);
    try {
      const auto ops = koszul_operators(suite[k], field);
      const ChainComplex<F> kos = koszul_complex(ops);
      for (long i = 1; i < static_cast<long>(kos.length()); ++i) {
        o.require((kos.boundary(i - 1) * kos.boundary(i)).is_zero(), tag + ": d^2 != 0");
      }
      const EulerCharacteristic e = euler_characteristic(kos);
      o.require(e.from_homology == e.from_components, tag + ": Euler characteristics differ");
      for (const auto& op : ops) {
        const ChainMap<F> act = koszul_action(kos, ops.size(), op);
        for (long i = 0; i <= static_cast<long>(kos.length()); ++i) {
          o.require(induced_map_is_zero(act, i), tag + ": homology not annihilated");
        }
      }
      const auto cone = homology_dims(mapping_cone(identity_map(kos)));
      o.require(std::all_of(cone.begin(), cone.end(), [](std::size_t d) { return d == 0; }), tag + ": cone not acyclic");
      for (auto h : homology_dims(kos)) o.ints.push_back(static_cast<long long>(h));
      o.ints.push_back(e.from_homology);
    } catch (const Error& e) {
      o.fail(tag + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(suite.size()) + " complexes";
  return o;
}

// ---------------------------------------------------------------------------

struct Line {
  std::string id;
  std::string title;
  bool pass;
  std::string detail;
  double secs;
};

void print(const Line& l) {
  std::printf("%s %-3s %s: %s [%.2fs]\n", l.pass ? "PASS" : "FAIL", l.id.c_str(), l.title.c_str(),
              l.detail.c_str(), l.secs);
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::vector<Line> lines;
  auto emit = [&](Line l) {
    print(l);
    lines.push_back(std::move(l));
  };
  std::map<std::string, std::pair<std::vector<long long>, std::vector<long long>>> backends;
  std::map<std::string, double> rational_secs;

  // 1
  auto t = Clock::now();
  CurveResults c1 = criterion_1(PrimeField());
  const double s1 = seconds_since(t);
  c1.values.require(s1 < 1.0, "took " + std::to_string(s1) + " s");
  emit({"1a", "curve t^4: lengths, multiplicities, c, chi", c1.values.pass, c1.values.detail, s1});
  emit({"1b", "curve t^4: greg_probe fails in degree 1", c1.greg.pass, c1.greg.detail, s1});
  emit({"1c", "curve t^4: sop_check is false", c1.sop.pass, c1.sop.detail, s1});
  t = Clock::now();
  CurveResults q1 = criterion_1(RationalField());
  rational_secs["1"] = seconds_since(t);
  backends["1"] = {c1.values.ints, q1.values.ints};
  backends["1"].first.insert(backends["1"].first.end(), c1.greg.ints.begin(), c1.greg.ints.end());
  backends["1"].first.insert(backends["1"].first.end(), c1.sop.ints.begin(), c1.sop.ints.end());
  backends["1"].second.insert(backends["1"].second.end(), q1.greg.ints.begin(), q1.greg.ints.end());
  backends["1"].second.insert(backends["1"].second.end(), q1.sop.ints.begin(), q1.sop.ints.end());

  // 2-4
  const auto chi_instances = chi_suite();
  t = Clock::now();
  ChiResults c2 = criteria_2_to_4(chi_instances, kPrime);
  const double s2 = seconds_since(t);
  c2.stabilization.require(s2 < 60.0, "took " + std::to_string(s2) + " s");
  emit({"2", "chi_K stabilizes and equals e0(a) - c e0(q)", c2.stabilization.pass, c2.stabilization.detail, s2});
  emit({"3", "chi >= 0", c2.nonnegative.pass, c2.nonnegative.detail, s2});
  emit({"4", "sop_check passes => chi = 0", c2.sop_zero.pass, c2.sop_zero.detail, s2});
  t = Clock::now();
  ChiResults q2 = criteria_2_to_4(chi_instances, kRational);
  rational_secs["2-4"] = seconds_since(t);
  backends["2-4"] = {c2.stabilization.ints, q2.stabilization.ints};

  // 5
  const auto add = additivity_suite();
  const auto quo = quotient_suite();
  t = Clock::now();
  Outcome c5 = criterion_5(add, quo, kPrime);
  emit({"5", "e0 grid, additivity, quotient", c5.pass, c5.detail, seconds_since(t)});
  t = Clock::now();
  backends["5"] = {c5.ints, criterion_5(add, quo, kRational).ints};
  rational_secs["5"] = seconds_since(t);

  // 6
  const auto bez = bezout_suite();
  t = Clock::now();
  Outcome c6 = criterion_6(bez, kPrime);
  const double s6 = seconds_since(t);
  c6.require(s6 < 30.0, "took " + std::to_string(s6) + " s");
  emit({"6", "local Bezout mu >= cd + t and mu - cd = chi", c6.pass, c6.detail, s6});
  t = Clock::now();
  backends["6"] = {c6.ints, criterion_6(bez, kRational).ints};
  rational_secs["6"] = seconds_since(t);

  // 7
  const auto colon = colon_suite();
  t = Clock::now();
  Outcome c7 = criterion_7(colon, kPrime);
  emit({"7", "colon constants and c e0(q) = l(M/aM) - constant", c7.pass, c7.detail, seconds_since(t)});
  t = Clock::now();
  backends["7"] = {c7.ints, criterion_7(colon, kRational).ints};
  rational_secs["7"] = seconds_since(t);

  // 8
  const auto kos = koszul_suite();
  t = Clock::now();
  Outcome c8 = criterion_8(kos, PrimeField());
  const double s8 = seconds_since(t);
  c8.require(s8 < 10.0, "took " + std::to_string(s8) + " s");
  emit({"8", "Koszul: d^2 = 0, Euler characteristics, cone, annihilation", c8.pass, c8.detail, s8});
  t = Clock::now();
  backends["8"] = {c8.ints, criterion_8(kos, RationalField()).ints};
  rational_secs["8"] = seconds_since(t);

  // 9
  Outcome c9;
  std::size_t compared = 0;
  double total_rational = 0;
  for (const auto& [id, pair] : backends) {
    c9.require(pair.first == pair.second, "criterion " + id + " differs between fp:32003 and rational");
    compared += pair.first.size();
  }
  for (const auto& [id, s] : rational_secs) total_rational += s;
  if (c9.pass) c9.detail = std::to_string(compared) + " integers identical";
  emit({"9", "fp:32003 and rational backends agree", c9.pass, c9.detail, total_rational});

  const auto failed = std::count_if(lines.begin(), lines.end(), [](const Line& l) { return !l.pass; });
  std::printf("%zu/%zu criteria pass\n", lines.size() - static_cast<std::size_t>(failed), lines.size());
  return failed == 0 ? 0 : 1;
}
