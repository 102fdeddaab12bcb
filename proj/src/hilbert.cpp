#include "multlab/hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "multlab/localmodel.hpp"

namespace multlab {

std::vector<std::vector<long long>> forward_differences(const std::vector<std::size_t>& values) {
  std::vector<std::vector<long long>> rows;
  rows.emplace_back(values.begin(), values.end());
  while (rows.back().size() > 1) {
    const auto& prev = rows.back();
    std::vector<long long> next(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
    rows.push_back(std::move(next));
  }
  return rows;
}

namespace {

bool tail_constant(const std::vector<long long>& row, std::uint32_t window) {
  if (row.size() < window || window == 0) return false;
  return std::all_of(row.end() - window, row.end(), [&](long long v) { return v == row.back(); });
}

std::uint32_t constant_from(const std::vector<long long>& row) {
  std::size_t i = row.size();
  while (i > 0 && row[i - 1] == row.back()) --i;
  return static_cast<std::uint32_t>(i);
}

std::string join_generators(const std::vector<std::string>& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? ", " : "") + g[i];
  return out;
}

}  // namespace

template <ExactField F>
HilbertTable hs_table(Workspace<F>& ws, const std::vector<Polynomial<F>>& q,
                      const HilbertOptions& options) {
  if (q.empty()) throw InputError("hs_table needs at least one generator");
  if (options.window == 0) throw InputError("hs window must be positive");
  HilbertTable table;
  for (const auto& g : q) table.generators.push_back(g.to_string());
  auto& ladder = ws.ladder(q);

  // The Hilbert-Samuel polynomial has degree dim M <= number of generators.
  const auto max_dim = static_cast<std::uint32_t>(q.size());
  std::uint32_t n_max = std::max<std::uint32_t>(options.n_max, 1);
  for (;;) {
    while (table.values.size() <= n_max) {
      table.values.push_back(ladder.length(static_cast<long>(table.values.size()) + 1));
    }
    table.n_max = n_max;
    table.differences = forward_differences(table.values);

    std::optional<std::uint32_t> found;
    if (options.dimension) {
      if (*options.dimension < table.differences.size() &&
          tail_constant(table.differences[*options.dimension], options.window)) {
        found = *options.dimension;
      }
    } else {
      for (std::uint32_t r = 0; r <= max_dim && r < table.differences.size(); ++r) {
        if (tail_constant(table.differences[r], options.window)) {
          found = r;
          break;
        }
      }
    }
    if (found) {
      table.dimension = *found;
      table.e0 = table.differences[*found].back();
      table.stable_from = constant_from(table.differences[*found]);
      return table;
    }
    if (n_max >= options.n_max_limit) {
      throw InsufficientRange("the Hilbert-Samuel differences of (" +
                              join_generators(table.generators) + ") did not become constant up to n = " +
                              std::to_string(n_max));
    }
    n_max = std::min(n_max * 2, options.n_max_limit);
  }
}

template <ExactField F>
HilbertTable hs_table(const ModuleSpec<F>& spec, const std::vector<Polynomial<F>>& q,
                      const HilbertOptions& options, Limits limits) {
  Workspace<F> ws(spec, limits);
  return hs_table(ws, q, options);
}

template <ExactField F>
long long e0_of_parameters(Workspace<F>& ws, const std::vector<Polynomial<F>>& a,
                           const HilbertOptions& options) {
  if (a.empty()) {
    // The empty sequence is a system of parameters only for modules of finite length.
    try {
      return static_cast<long long>(ws.colength({}, 0, true));
    } catch (const NonStabilizing&) {
      throw NotSystemOfParameters("M does not have finite length, so the empty sequence is not a "
                                  "system of parameters");
    }
  }
  HilbertTable table;
  try {
    table = hs_table(ws, a, options);
  } catch (const NonStabilizing& e) {
    std::vector<std::string> g;
    for (const auto& x : a) g.push_back(x.to_string());
    throw NotSystemOfParameters("(" + join_generators(g) + ") is not primary to the maximal ideal: " +
                                e.what());
  }
  if (table.dimension != a.size()) {
    throw NotSystemOfParameters("(" + join_generators(table.generators) + ") has " +
                                std::to_string(a.size()) + " elements but dim M = " +
                                std::to_string(table.dimension));
  }
  return table.e0;
}

template <ExactField F>
long long e0_of_parameters(const ModuleSpec<F>& spec, const std::vector<Polynomial<F>>& a,
                           const HilbertOptions& options, Limits limits) {
  Workspace<F> ws(spec, limits);
  return e0_of_parameters(ws, a, options);
}

template <ExactField F>
std::vector<IdentityCheck> verify_multiplicity_identities(Workspace<F>& ws,
                                                          const IdentityRequest<F>& request,
                                                          const HilbertOptions& options) {
  const auto& a = request.a;
  if (a.empty()) throw InputError("verify-identities needs a nonempty sequence a");
  std::vector<IdentityCheck> out;
  const long long base = e0_of_parameters(ws, a, options);

  if (!request.powers.empty()) {
    if (request.powers.size() != a.size()) {
      throw DimensionMismatch("powers has " + std::to_string(request.powers.size()) +
                              " entries but a has " + std::to_string(a.size()));
    }
    std::vector<Polynomial<F>> raised;
    long long product = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (request.powers[i] == 0) throw InputError("powers must be positive");
      raised.push_back(a[i].pow(request.powers[i]));
      product *= request.powers[i];
    }
    IdentityCheck c;
    c.name = "powers";
    c.statement = "e0(a_1^n_1, ..., a_d^n_d; M) = n_1 * ... * n_d * e0(a; M)";
    c.lhs = e0_of_parameters(ws, raised, options);
    c.rhs = product * base;
    c.pass = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }

  if (request.factor) {
    const auto& [b, c2] = *request.factor;
    if (!(b * c2 == a[0])) {
      throw InputError("factor product " + (b * c2).to_string() + " differs from a_1 = " +
                       a[0].to_string());
    }
    auto with_first = [&](const Polynomial<F>& first) {
      std::vector<Polynomial<F>> s = a;
      s[0] = first;
      return s;
    };
    IdentityCheck c;
    c.name = "additivity";
    c.statement = "e0(b*c, a_2, ..., a_d; M) = e0(b, a_2, ..., a_d; M) + e0(c, a_2, ..., a_d; M)";
    c.lhs = base;
    c.rhs = e0_of_parameters(ws, with_first(b), options) +
            e0_of_parameters(ws, with_first(c2), options);
    c.pass = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }

  if (request.quotient_check) {
    if (!annihilator_is_zero(ws, a[0])) {
      throw RestrictionViolated("0 :_M " + a[0].to_string() +
                                " is nonzero; the quotient identity is only checked for "
                                "nonzerodivisors");
    }
    ModuleSpec<F> quotient = ws.spec();
    quotient.annihilator.push_back(a[0]);
    Workspace<F> qws(quotient, ws.limits());
    const std::vector<Polynomial<F>> rest(a.begin() + 1, a.end());
    IdentityCheck c;
    c.name = "quotient";
    c.statement = "e0(a_1, ..., a_d; M) = e0(a_2, ..., a_d; M/a_1 M) when 0 :_M a_1 = 0";
    c.lhs = base;
    c.rhs = e0_of_parameters(qws, rest, options);
    c.pass = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

#define MULTLAB_HILBERT_INSTANTIATE(F)                                                           \
  template HilbertTable hs_table(Workspace<F>&, const std::vector<Polynomial<F>>&,               \
                                 const HilbertOptions&);                                         \
  template HilbertTable hs_table(const ModuleSpec<F>&, const std::vector<Polynomial<F>>&,        \
                                 const HilbertOptions&, Limits);                                 \
  template long long e0_of_parameters(Workspace<F>&, const std::vector<Polynomial<F>>&,          \
                                      const HilbertOptions&);                                    \
  template long long e0_of_parameters(const ModuleSpec<F>&, const std::vector<Polynomial<F>>&,   \
                                      const HilbertOptions&, Limits);                            \
  template std::vector<IdentityCheck> verify_multiplicity_identities(                            \
      Workspace<F>&, const IdentityRequest<F>&, const HilbertOptions&);
MULTLAB_HILBERT_INSTANTIATE(PrimeField)
MULTLAB_HILBERT_INSTANTIATE(RationalField)

}  // namespace multlab
