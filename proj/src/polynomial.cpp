#include "multlab/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace multlab {

std::uint32_t total_degree(const Exponents& e) {
  std::uint64_t s = std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  return static_cast<std::uint32_t>(s);
}

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

template <ExactField F>
Polynomial<F>::Polynomial(F field, std::vector<std::string> vars)
    : field_(std::move(field)), vars_(std::move(vars)) {}

template <ExactField F>
Polynomial<F> Polynomial<F>::constant(F field, std::vector<std::string> vars, const value_type& c) {
  Polynomial p(std::move(field), std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

template <ExactField F>
Polynomial<F> Polynomial<F>::variable(F field, std::vector<std::string> vars, std::size_t index) {
  Polynomial p(std::move(field), std::move(vars));
  Exponents e(p.nvars(), 0);
  e.at(index) = 1;
  p.add_term(e, p.field_.one());
  return p;
}

template <ExactField F>
Polynomial<F> Polynomial<F>::monomial(F field, std::vector<std::string> vars, Exponents e,
                                      const value_type& c) {
  Polynomial p(std::move(field), std::move(vars));
  if (e.size() != p.nvars()) throw DimensionMismatch("exponent vector length");
  p.add_term(e, c);
  return p;
}

template <ExactField F>
typename Polynomial<F>::value_type Polynomial<F>::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

template <ExactField F>
void Polynomial<F>::add_term(const Exponents& e, const value_type& c) {
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

template <ExactField F>
long Polynomial<F>::degree() const {
  return terms_.empty() ? -1 : static_cast<long>(total_degree(terms_.rbegin()->first));
}

template <ExactField F>
long Polynomial<F>::order() const {
  return terms_.empty() ? -1 : static_cast<long>(total_degree(terms_.begin()->first));
}

template <ExactField F>
bool Polynomial<F>::is_homogeneous() const {
  return degree() == order();
}

template <ExactField F>
Polynomial<F> Polynomial<F>::homogeneous_component(std::uint32_t d) const {
  Polynomial out(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

template <ExactField F>
void Polynomial<F>::require_compatible(const Polynomial& o, const char* where) const {
  if (!(field_ == o.field_)) {
    throw BackendMismatch(std::string(where) + ": operands live over " + field_.name() + " and " +
                          o.field_.name());
  }
  if (vars_ != o.vars_) {
    throw DimensionMismatch(std::string(where) + ": operands use different variable lists");
  }
}

template <ExactField F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& o) const {
  require_compatible(o, "polynomial sum");
  Polynomial out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

template <ExactField F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& o) const {
  require_compatible(o, "polynomial difference");
  Polynomial out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, field_.neg(c));
  return out;
}

template <ExactField F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& o) const {
  require_compatible(o, "polynomial product");
  Polynomial out(field_, vars_);
  Exponents e(nvars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > kMaxExponent) {
          throw ExponentOverflow("exponent of " + vars_[i] + " exceeds " +
                                     std::to_string(kMaxExponent),
                                 0);
        }
      }
      out.add_term(e, field_.mul(ca, cb));
    }
  }
  return out;
}

template <ExactField F>
Polynomial<F> Polynomial<F>::operator-() const {
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_) c = field_.neg(c);
  return out;
}

template <ExactField F>
Polynomial<F> Polynomial<F>::scaled(const value_type& s) const {
  Polynomial out(field_, vars_);
  if (field_.is_zero(s)) return out;
  out.terms_ = terms_;
  for (auto& [e, c] : out.terms_) c = field_.mul(c, s);
  return out;
}

template <ExactField F>
Polynomial<F> Polynomial<F>::pow(std::uint32_t k) const {
  Polynomial result = constant(field_, vars_, field_.one());
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

template <ExactField F>
bool Polynomial<F>::operator==(const Polynomial& o) const {
  if (!(field_ == o.field_) || vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || !field_.equal(c, it->second)) return false;
    ++it;
  }
  return true;
}

template <ExactField F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coef = field_.format(c);
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << coef;
    } else if (coef == "1") {
      out << mono;
    } else {
      out << coef << '*' << mono;
    }
  }
  return out.str();
}

template <ExactField F>
InitialForm<F> initial_form_m(const Polynomial<F>& p) {
  if (p.is_zero()) return {0, Polynomial<F>(p.field(), p.vars()), true};
  const auto c = static_cast<std::uint32_t>(p.order());
  return {c, p.homogeneous_component(c), false};
}

template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;
template InitialForm<PrimeField> initial_form_m(const Polynomial<PrimeField>&);
template InitialForm<RationalField> initial_form_m(const Polynomial<RationalField>&);

}  // namespace multlab
