#pragma once

// Text forms of ring elements and points.
//
// Element grammar (usual precedence, '^' binds tightest, exponent is a
// non-negative integer literal):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'T' | 'p' | '(' expr ')'
//
// 'T' is the cube root of unity and 'p' = 1 - T.  Points are four element
// expressions joined by ':'.

#include <array>
#include <string>
#include <string_view>

#include "cubicloop/eisenstein.hpp"

namespace cubicloop {

RingElt parse_element(std::string_view text);
std::array<RingElt, 4> parse_coordinates(std::string_view text);

/// Exact a+b*T form, e.g. "2-3*T", "-T", "0".  Precision is not printed.
std::string format_element(const RingElt& x);

/// Residue of x modulo p^n.  For n <= 3 the form mirrors the usual notation
/// for classes: units as +-T^i + d*p^2, non-units as d1*p + d2*p^2.  Larger n
/// falls back to the balanced digit polynomial d0 + d1*p + ...
std::string format_residue(const RingElt& x, int n);

/// Balanced digit polynomial, e.g. "-1+p^2-p^3".
std::string format_digits(const DigitVector& d);

}  // namespace cubicloop
