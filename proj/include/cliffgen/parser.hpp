#pragma once

// Recursive-descent front end for the radial expression DSL.
//
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' signed_number | '^(' signed_number ')')?
//   atom   := number | 'i' | 'x0' | 'r' | 'z' | 'exp(' expr ')' | 'cos(' expr ')'
//           | 'sin(' expr ')' | '(' expr ')'
//
// 'z' expands to x0 + i*r at parse time.

#include <string_view>

#include "cliffgen/expr.hpp"

namespace cliffgen::expr {

/// Throws ParseError carrying the byte offset of the offending token.
Expression parse(std::string_view text);

}  // namespace cliffgen::expr
