#include "multlab/commands.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "multlab/bezout.hpp"
#include "multlab/complex.hpp"
#include "multlab/graded.hpp"
#include "multlab/localmodel.hpp"

namespace multlab {

using Json = nlohmann::ordered_json;

namespace {

std::string error_kind(const Error& e) {
  // Most derived first.
  if (dynamic_cast<const UnknownVariable*>(&e)) return "UnknownVariable";
  if (dynamic_cast<const ExponentOverflow*>(&e)) return "ExponentOverflow";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const BackendMismatch*>(&e)) return "BackendMismatch";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const RestrictionViolated*>(&e)) return "RestrictionViolated";
  if (dynamic_cast<const CommonComponent*>(&e)) return "CommonComponent";
  if (dynamic_cast<const NotAtOrigin*>(&e)) return "NotAtOrigin";
  if (dynamic_cast<const PreconditionFailed*>(&e)) return "PreconditionFailed";
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  if (dynamic_cast<const NonStabilizing*>(&e)) return "NonStabilizing";
  if (dynamic_cast<const NotSystemOfParameters*>(&e)) return "NotSystemOfParameters";
  if (dynamic_cast<const InsufficientRange*>(&e)) return "InsufficientRange";
  if (dynamic_cast<const CeilingReached*>(&e)) return "CeilingReached";
  if (dynamic_cast<const NonConstant*>(&e)) return "NonConstant";
  if (dynamic_cast<const ResourceLimit*>(&e)) return "ResourceLimit";
  if (dynamic_cast<const ComputationError*>(&e)) return "ComputationError";
  if (dynamic_cast<const NegativeChi*>(&e)) return "NegativeChi";
  if (dynamic_cast<const PropertyViolation*>(&e)) return "PropertyViolation";
  return "Error";
}

template <ExactField F>
std::vector<std::string> texts(const std::vector<Polynomial<F>>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

Json optional_json(const std::optional<std::uint32_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json greg_json(const GregVerdict& g) {
  Json j;
  j["element"] = g.element;
  j["initial_degree"] = g.initial_degree;
  j["degree_bound"] = g.bound;
  if (g.regular_up_to_bound) {
    j["verdict"] = "regular up to degree " + std::to_string(g.bound);
    j["regular_up_to_bound"] = true;
  } else {
    j["verdict"] = "fails in degree " + std::to_string(*g.failing_degree);
    j["regular_up_to_bound"] = false;
    j["failing_degree"] = *g.failing_degree;
    j["kernel_dim"] = g.kernel_dim;
    j["witness"] = g.witness;
  }
  return j;
}

template <ExactField F>
class Context {
 public:
  Context(const ProblemFile& p, F field)
      : problem_(p),
        ring_(p.ring()),
        field_(std::move(field)),
        ws_(make_spec(), limits_of(p)),
        hopts_(hilbert_options_of(p)) {
    q_ = problem_.q.empty() ? maximal_ideal_generators(ring_, field_) : parse_list(problem_.q);
    a_ = parse_list(problem_.a);
  }

  Report run(const std::string& command) {
    Report r;
    r.doc["q"] = texts(q_);
    if (!a_.empty()) r.doc["a"] = texts(a_);
    Json& out = r.doc["result"];
    if (command == "hilbert") {
      hilbert(out);
    } else if (command == "e0") {
      e0(out);
    } else if (command == "chi") {
      chi(out);
    } else if (command == "sop-check") {
      sop(out);
    } else if (command == "greg") {
      greg(out);
    } else if (command == "colon-const") {
      r.exit_code = colon(out);
    } else if (command == "bezout") {
      r.exit_code = bezout(out);
    } else if (command == "koszul") {
      r.exit_code = koszul(out);
    } else if (command == "verify-identities") {
      r.exit_code = identities(out);
    } else {
      throw InputError("unknown command " + command);
    }
    return r;
  }

 private:
  ModuleSpec<F> make_spec() const {
    ModuleSpec<F> s{ring_, {}, field_};
    for (const auto& t : problem_.annihilator) s.annihilator.push_back(parse_element(ring_, t, field_));
    return s;
  }

  std::vector<Polynomial<F>> parse_list(const std::vector<std::string>& v) const {
    std::vector<Polynomial<F>> out;
    for (const auto& t : v) out.push_back(parse_element(ring_, t, field_));
    return out;
  }

  std::uint32_t opt(const std::string& key, std::int64_t fallback, std::int64_t lo, std::int64_t hi) const {
    return static_cast<std::uint32_t>(problem_.option(key, fallback, lo, hi));
  }

  void require_a(std::size_t min_count, const std::string& command) const {
    if (a_.size() < min_count) {
      throw InputError(command + " needs at least " + std::to_string(min_count) +
                       " element(s) in a");
    }
  }

  KoszulSetup<F> setup() {
    require_a(1, "this command");
    return make_setup(ws_, q_, a_, opt("initial_ceiling", 16, 0, 256));
  }

  void hilbert(Json& out) {
    const HilbertTable t = hs_table(ws_, q_, hopts_);
    out["n_max"] = t.n_max;
    out["values"] = t.values;
    Json diffs = Json::array();
    for (std::size_t r = 0; r <= t.dimension + 1 && r < t.differences.size(); ++r) {
      diffs.push_back(t.differences[r]);
    }
    out["differences"] = diffs;
    out["dimension"] = t.dimension;
    out["e0"] = t.e0;
    out["stable_from"] = t.stable_from;
  }

  void e0(Json& out) {
    if (a_.empty()) {
      const HilbertTable t = hs_table(ws_, q_, hopts_);
      out["of"] = "q";
      out["dimension"] = t.dimension;
      out["e0"] = t.e0;
      return;
    }
    out["of"] = "a";
    out["e0"] = e0_of_parameters(ws_, a_, hopts_);
  }

  void chi(Json& out) {
    const auto s = setup();
    ChiOptions o;
    o.window = opt("chi_window", o.window, 1, 64);
    o.max_scan = opt("chi_scan", o.max_scan, 1, 1000);
    o.hilbert = hopts_;
    const ChiReport r = chi_defect(ws_, s, o);
    out["c"] = s.c;
    out["c_product"] = r.c_product;
    out["e0_a"] = r.e0_a;
    out["e0_q"] = r.e0_q;
    out["defect"] = r.defect;
    out["n"] = r.n;
    out["chi_L"] = r.chi_L;
    out["chi_K"] = r.chi_K;
    out["chi"] = r.chi;
    out["window"] = o.window;
  }

  void sop(Json& out) {
    const auto s = setup();
    const std::uint32_t window = opt("sop_window", 6, 1, 64);
    const std::uint32_t ceiling = opt("sop_ceiling", 16, 0, 256);
    const SopCheck c = sop_check(ws_, s, window, ceiling);
    out["c"] = s.c;
    out["holds"] = c.holds;
    out["onset"] = optional_json(c.onset);
    out["first_failure"] = optional_json(c.first_failure);
    out["last_failure"] = optional_json(c.last_failure);
    out["scanned_to"] = c.scanned_to;
    out["window"] = window;
    out["ceiling"] = ceiling;
  }

  void greg(Json& out) {
    require_a(1, "greg");
    const std::uint32_t bound = opt("degree_bound", 16, 0, 256);
    Json list = Json::array();
    for (const auto& g : greg_sequence(ws_, q_, a_, bound)) list.push_back(greg_json(g));
    out["sequence"] = list;
    out["regular_sequence_up_to_bound"] =
        list.size() == a_.size() &&
        std::all_of(list.begin(), list.end(), [](const Json& j) { return j["regular_up_to_bound"].get<bool>(); });
  }

  int colon(Json& out) {
    const auto s = setup();
    ColonOptions o;
    o.window = opt("colon_window", o.window, 1, 64);
    o.max_scan = opt("colon_scan", o.max_scan, 1, 1000);
    o.degree_bound = opt("degree_bound", o.degree_bound, 0, 256);
    o.require_hypothesis = false;
    o.hilbert = hopts_;
    const ColonConstant c = colon_constant(ws_, s, o);
    out["c"] = s.c;
    out["c_product"] = c.c_product;
    out["e0_q"] = c.e0_q;
    out["length_quotient"] = c.length_quotient;
    out["n"] = c.n;
    out["values"] = c.values;
    out["constant"] = c.constant;
    Json hyp = Json::array();
    for (const auto& g : c.hypothesis) hyp.push_back(greg_json(g));
    out["hypothesis"] = hyp;
    out["hypothesis_holds"] = c.hypothesis_holds;
    out["identity_holds"] = c.identity_holds;
    return c.hypothesis_holds && !c.identity_holds ? 4 : 0;
  }

  int bezout(Json& out) {
    if (a_.size() != 2) throw InputError("bezout needs exactly two curves in a");
    const BezoutReport b = classify(ws_, a_[0], a_[1]);
    out["f"] = b.f;
    out["g"] = b.g;
    out["c"] = b.c;
    out["d"] = b.d;
    out["mu"] = b.mu;
    out["t"] = b.t;
    out["transversal"] = b.transversal;
    out["bound"] = b.bound;
    out["equality"] = b.equality;
    const auto m = maximal_ideal_generators(ring_, field_);
    const ChiReport r = chi_defect(ws_, make_setup(ws_, m, a_, opt("initial_ceiling", 16, 0, 256)));
    out["chi"] = r.chi;
    const bool consistent = static_cast<long long>(b.mu) - static_cast<long long>(b.c) * b.d == r.chi;
    out["chi_consistent"] = consistent;
    return consistent ? 0 : 4;
  }

  int koszul(Json& out) {
    require_a(1, "koszul");
    const std::uint32_t order = opt("koszul_order", 4, 1, 64);
    TruncatedModel<F> model(ws_, order);
    std::vector<Matrix<F>> ops;
    for (const auto& x : a_) ops.push_back(model.multiplication_matrix(x));
    const ChainComplex<F> k = koszul_complex(ops);
    const auto h = homology_dims(k);
    const EulerCharacteristic e = euler_characteristic(k);
    bool annihilated = true;
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const ChainMap<F> act = koszul_action(k, ops.size(), ops[j]);
      for (std::size_t i = 0; i <= k.length(); ++i) {
        annihilated = annihilated && induced_map_is_zero(act, static_cast<long>(i));
      }
    }
    const auto cone = homology_dims(mapping_cone(identity_map(k)));
    const bool cone_acyclic = std::all_of(cone.begin(), cone.end(), [](std::size_t d) { return d == 0; });
    out["model_order"] = order;
    out["model_dim"] = model.dim();
    out["dims"] = k.dims();
    out["homology"] = h;
    out["euler_from_homology"] = e.from_homology;
    out["euler_from_components"] = e.from_components;
    out["boundary_squares_zero"] = true;  // checked when the complex is built
    out["homology_annihilated"] = annihilated;
    out["cone_of_identity_acyclic"] = cone_acyclic;
    return annihilated && cone_acyclic ? 0 : 4;
  }

  int identities(Json& out) {
    require_a(1, "verify-identities");
    IdentityRequest<F> req;
    req.a = a_;
    if (!problem_.factor.empty()) {
      const auto f = parse_list(problem_.factor);
      req.factor = std::make_pair(f[0], f[1]);
    }
    req.powers = problem_.powers;
    req.quotient_check = annihilator_is_zero(ws_, a_[0]);
    if (!req.quotient_check) {
      out["quotient_skipped"] = "0 :_M " + a_[0].to_string() + " is nonzero";
    }
    bool all = true;
    Json list = Json::array();
    for (const auto& c : verify_multiplicity_identities(ws_, req, hopts_)) {
      list.push_back({{"name", c.name}, {"statement", c.statement}, {"lhs", c.lhs}, {"rhs", c.rhs},
                      {"pass", c.pass}});
      all = all && c.pass;
    }
    out["checks"] = list;
    out["all_pass"] = all;
    return all ? 0 : 4;
  }

  const ProblemFile& problem_;
  RingSpec ring_;
  F field_;
  Workspace<F> ws_;
  HilbertOptions hopts_;
  std::vector<Polynomial<F>> q_;
  std::vector<Polynomial<F>> a_;
};

void render(std::ostringstream& out, const Json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render(out, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        out << indent << "  -\n";
        render(out, item, indent + "    ");
      }
    } else if (value.is_string()) {
      const auto s = value.get<std::string>();
      if (s.find('\n') != std::string::npos) {
        out << indent << key << ":\n";
        std::istringstream lines(s);
        for (std::string line; std::getline(lines, line);) out << indent << "  | " << line << "\n";
      } else {
        out << indent << key << ": " << s << "\n";
      }
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"hilbert",     "e0",     "chi",    "sop-check",
                                                 "greg",        "colon-const", "bezout", "koszul",
                                                 "verify-identities"};
  return names;
}

Report run(const std::string& command, const ProblemFile& problem, const RunOptions& options) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    throw InputError("unknown command " + command);
  }
  ProblemFile p = problem;
  if (options.field) {
    parse_field(*options.field);
    p.field = *options.field;
  }
  const auto start = std::chrono::steady_clock::now();
  Report body = std::visit(
      [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        Context<F> ctx(p, field);
        return ctx.run(command);
      },
      parse_field(p.field));

  Report r;
  r.exit_code = body.exit_code;
  r.doc["schema"] = kReportSchema;
  r.doc["command"] = command;
  r.doc["status"] = body.exit_code == 0 ? "ok" : "property-violation";
  r.doc["field"] = p.field;
  r.doc["seed"] = options.seed;
  r.doc["ring"] = p.ring().describe();
  for (const auto& [k, v] : body.doc.items()) r.doc[k] = v;
  r.doc["problem"] = to_text(p);
  if (options.timing) {
    r.doc["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

Json error_report(const std::string& command, const Error& error) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["status"] = "error";
  j["error"] = {{"kind", error_kind(error)}, {"message", error.what()}, {"exit_code", exit_code_for(error)}};
  return j;
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  render(out, doc, "");
  return out.str();
}

}  // namespace multlab
