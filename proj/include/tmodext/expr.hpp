#pragma once

#include <string>
#include <vector>

#include "tmodext/skew.hpp"

namespace tmodext {

// Grammar for entries of operator matrices, evaluated in K{T} or K{S}:
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | atom postfix*
//   postfix := '^' '(' signed-int ')'    Frobenius twist
//            | '^' nat                   power
//   atom    := ident | nat | '(' expr ')'
// Reserved identifiers: theta, T, S, c, and w (the field generator when the
// coefficient constants live in a proper extension of F_p). All other
// identifiers must be declared in `symbols`. Division is ring division and
// the divisor must be a nonzero scalar.
struct ParseContext {
  FieldParams field;
  Side side = Side::Tau;
  std::vector<std::string> symbols;
};

SkewPoly parse_skew(const std::string& text, const ParseContext& ctx);

// Same grammar, but the result must have operator degree zero.
RationalCoeff parse_scalar(const std::string& text, const ParseContext& ctx);

}  // namespace tmodext
