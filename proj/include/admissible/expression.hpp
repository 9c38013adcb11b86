#pragma once

// Canonical ASCII grammar for field elements:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' '-'? integer)?
//   atom   := integer | variable | '(' expr ')'
//
// Variables are `f`, `t` for Q(zeta)(f, t), `x` for the univariate residue
// fields, and `z` for the primitive root of unity of the given order.

#include "admissible/rational_function.hpp"
#include "admissible/univariate.hpp"

#include <stdexcept>
#include <string_view>

namespace admissible {

class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// `zeta_order` is the order of the root of unity named z; 0 forbids z.
RationalFunction2 parse_rational_function(std::string_view text, unsigned zeta_order = 0);
/// As parse_rational_function, but the result must be a polynomial.
BivariatePolynomial parse_polynomial(std::string_view text, unsigned zeta_order = 0);
UnivariateRational parse_univariate(std::string_view text, unsigned zeta_order = 0);

}  // namespace admissible
