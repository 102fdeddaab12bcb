#include "multlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "multlab/parser.hpp"

namespace multlab {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingSpec RingSpec::poly_local(std::vector<std::string> vars) {
  if (vars.empty()) throw InputError("a local polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_identifier(v)) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("variable '" + v + "' listed twice");
  }
  RingSpec r;
  r.kind_ = PolyLocal{std::move(vars)};
  return r;
}

RingSpec RingSpec::monomial_curve(std::vector<std::uint32_t> exponents) {
  if (exponents.empty()) throw InputError("a monomial curve needs at least one exponent");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) throw InputError("monomial curve exponents must be positive");
    if (i > 0 && exponents[i] <= exponents[i - 1]) {
      throw InputError("monomial curve exponents must be strictly increasing");
    }
  }
  std::uint32_t g = 0;
  for (auto e : exponents) g = std::gcd(g, e);
  if (g != 1) {
    throw InputError("monomial curve exponents must have gcd 1 (got " + std::to_string(g) + ")");
  }
  if (exponents.front() > 1000 || exponents.back() > 100000) {
    throw InputError("monomial curve exponents are too large");
  }
  // Semigroup membership up to g_1 * g_r, which exceeds the Frobenius number.
  const std::uint32_t bound = exponents.front() * exponents.back() + exponents.front();
  std::vector<bool> member(bound + 1, false);
  member[0] = true;
  for (std::uint32_t s = 1; s <= bound; ++s) {
    for (auto e : exponents) {
      if (e <= s && member[s - e]) {
        member[s] = true;
        break;
      }
    }
  }
  std::uint32_t conductor = 0;
  for (std::uint32_t s = 0; s <= bound; ++s) {
    if (!member[s]) conductor = s + 1;
  }
  RingSpec r;
  r.kind_ = MonomialCurve{std::move(exponents)};
  r.conductor_ = conductor;
  r.below_conductor_.assign(member.begin(), member.begin() + conductor);
  return r;
}

std::vector<std::string> RingSpec::element_vars() const {
  if (is_curve()) return {"t"};
  return poly().vars;
}

std::vector<std::string> RingSpec::input_vars() const {
  if (!is_curve()) return poly().vars;
  std::vector<std::string> v{"t"};
  for (std::size_t i = 0; i < curve().exponents.size(); ++i) v.push_back("u" + std::to_string(i + 1));
  return v;
}

std::uint32_t RingSpec::min_generator_order() const {
  return is_curve() ? curve().exponents.front() : 1;
}

bool RingSpec::in_semigroup(std::uint32_t s) const {
  return s >= conductor_ || below_conductor_[s];
}

std::string RingSpec::describe() const {
  std::string out;
  if (is_curve()) {
    out = "k[[";
    for (std::size_t i = 0; i < curve().exponents.size(); ++i) {
      if (i) out += ", ";
      out += "t^" + std::to_string(curve().exponents[i]);
    }
    return out + "]]";
  }
  out = "k[";
  for (std::size_t i = 0; i < poly().vars.size(); ++i) {
    if (i) out += ", ";
    out += poly().vars[i];
  }
  return out + "] at the origin";
}

bool RingSpec::operator==(const RingSpec& o) const {
  if (is_curve() != o.is_curve()) return false;
  return is_curve() ? curve().exponents == o.curve().exponents : poly().vars == o.poly().vars;
}

template <ExactField F>
Polynomial<F> parse_element(const RingSpec& ring, std::string_view text, const F& field) {
  if (!ring.is_curve()) return parse_polynomial(text, ring.poly().vars, field);
  const auto raw = parse_polynomial(text, ring.input_vars(), field);
  const auto& g = ring.curve().exponents;
  Polynomial<F> out(field, {"t"});
  for (const auto& [e, c] : raw.terms()) {
    std::uint64_t s = e[0];
    for (std::size_t i = 0; i < g.size(); ++i) s += static_cast<std::uint64_t>(e[i + 1]) * g[i];
    if (s > kMaxExponent) throw ExponentOverflow("t-exponent exceeds " + std::to_string(kMaxExponent), 0);
    if (!ring.in_semigroup(static_cast<std::uint32_t>(s))) {
      throw InputError("t^" + std::to_string(s) + " does not lie in " + ring.describe());
    }
    out.add_term({static_cast<std::uint32_t>(s)}, c);
  }
  return out;
}

template <ExactField F>
long element_order(const RingSpec&, const Polynomial<F>& a) {
  return a.order();
}

template <ExactField F>
std::vector<Polynomial<F>> maximal_ideal_generators(const RingSpec& ring, const F& field) {
  std::vector<Polynomial<F>> out;
  if (ring.is_curve()) {
    for (auto g : ring.curve().exponents) out.push_back(Polynomial<F>::monomial(field, {"t"}, {g}, field.one()));
    return out;
  }
  for (std::size_t i = 0; i < ring.poly().vars.size(); ++i) {
    out.push_back(Polynomial<F>::variable(field, ring.poly().vars, i));
  }
  return out;
}

template Polynomial<PrimeField> parse_element(const RingSpec&, std::string_view, const PrimeField&);
template Polynomial<RationalField> parse_element(const RingSpec&, std::string_view,
                                                 const RationalField&);
template long element_order(const RingSpec&, const Polynomial<PrimeField>&);
template long element_order(const RingSpec&, const Polynomial<RationalField>&);
template std::vector<Polynomial<PrimeField>> maximal_ideal_generators(const RingSpec&,
                                                                      const PrimeField&);
template std::vector<Polynomial<RationalField>> maximal_ideal_generators(const RingSpec&,
                                                                         const RationalField&);

}  // namespace multlab
