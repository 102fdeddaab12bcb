#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multlab/polynomial.hpp"

namespace multlab {

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := int | var | '(' expr ')'
/// Whitespace is ignored. Juxtaposition ("2x", "x y") is rejected.
template <ExactField F>
Polynomial<F> parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                               const F& field);

extern template Polynomial<PrimeField> parse_polynomial(std::string_view,
                                                        const std::vector<std::string>&,
                                                        const PrimeField&);
extern template Polynomial<RationalField> parse_polynomial(std::string_view,
                                                           const std::vector<std::string>&,
                                                           const RationalField&);

}  // namespace multlab
