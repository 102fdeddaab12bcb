#pragma once

#include <vector>

#include "multlab/polynomial.hpp"

namespace multlab {

/// Dense univariate polynomial, coefficients from degree 0 upwards, no
/// trailing zeros.
template <ExactField F>
struct UPoly {
  using value_type = typename F::value_type;
  F field;
  std::vector<value_type> c;

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim();
  const value_type& lead() const { return c.back(); }
};

template <ExactField F>
UPoly<F> upoly_gcd(UPoly<F> a, UPoly<F> b);  // monic, or zero when both are zero

/// gcd of two binary forms (homogeneous in exactly two variables), with
/// leading coefficient 1 in the graded order.
template <ExactField F>
Polynomial<F> binary_form_gcd(const Polynomial<F>& f, const Polynomial<F>& g);

/// gcd in the global ring F[x, y] via primitive pseudo-remainder sequences,
/// normalized to leading coefficient 1 in the graded order.
template <ExactField F>
Polynomial<F> bivariate_gcd(const Polynomial<F>& f, const Polynomial<F>& g);

extern template Polynomial<PrimeField> binary_form_gcd(const Polynomial<PrimeField>&,
                                                       const Polynomial<PrimeField>&);
extern template Polynomial<RationalField> binary_form_gcd(const Polynomial<RationalField>&,
                                                          const Polynomial<RationalField>&);
extern template Polynomial<PrimeField> bivariate_gcd(const Polynomial<PrimeField>&,
                                                     const Polynomial<PrimeField>&);
extern template Polynomial<RationalField> bivariate_gcd(const Polynomial<RationalField>&,
                                                        const Polynomial<RationalField>&);

}  // namespace multlab
