#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "multlab/errors.hpp"
#include "multlab/field.hpp"

namespace multlab {

using Exponents = std::vector<std::uint32_t>;

/// Largest exponent (and total degree) accepted anywhere in a polynomial.
inline constexpr std::uint32_t kMaxExponent = 65535;

std::uint32_t total_degree(const Exponents& e);

/// Graded order: lower total degree first; within a degree, lexicographically
/// larger exponent vectors first (x^2 before x*y before y^2).
struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial with coefficients in an exact field. Terms are stored
/// in GradedOrder and never carry a zero coefficient.
template <ExactField F>
class Polynomial {
 public:
  using value_type = typename F::value_type;
  using TermMap = std::map<Exponents, value_type, GradedOrder>;

  Polynomial(F field, std::vector<std::string> vars);

  static Polynomial constant(F field, std::vector<std::string> vars, const value_type& c);
  static Polynomial variable(F field, std::vector<std::string> vars, std::size_t index);
  static Polynomial monomial(F field, std::vector<std::string> vars, Exponents e,
                             const value_type& c);

  const F& field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  value_type coefficient(const Exponents& e) const;
  value_type constant_term() const { return coefficient(Exponents(nvars(), 0)); }
  void add_term(const Exponents& e, const value_type& c);

  /// Highest total degree; -1 for the zero polynomial.
  long degree() const;
  /// Lowest total degree; -1 for the zero polynomial.
  long order() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(std::uint32_t d) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const value_type& s) const;
  Polynomial pow(std::uint32_t k) const;

  bool operator==(const Polynomial& o) const;

  /// Canonical text, readable back by parse_polynomial when coefficients are integers.
  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& o, const char* where) const;

  F field_;
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Lowest-degree homogeneous part with respect to the maximal ideal of the origin.
template <ExactField F>
struct InitialForm {
  std::uint32_t degree = 0;
  Polynomial<F> form;
  bool zero = false;  // the input was 0; degree and form carry no information
};

template <ExactField F>
InitialForm<F> initial_form_m(const Polynomial<F>& p);

extern template class Polynomial<PrimeField>;
extern template class Polynomial<RationalField>;
extern template InitialForm<PrimeField> initial_form_m(const Polynomial<PrimeField>&);
extern template InitialForm<RationalField> initial_form_m(const Polynomial<RationalField>&);

}  // namespace multlab
