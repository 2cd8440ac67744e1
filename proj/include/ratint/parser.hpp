#pragma once

#include <string>

#include "ratint/expr.hpp"

namespace ratint {

// Parses the infix expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' integer)?
//   base   := number | identifier | function '(' expr ')' | '(' expr ')'
// Functions: sin, cos, atan (arctan accepted as alias), log, sqrt.
// 'pi' is the circle constant. Unary minus binds between '*' and '^'.
// Failures raise parse_error carrying the byte span and expected tokens.
ExprPtr parse_expr_text(const std::string& text);

// Inverse of parse_expr_text up to structural equality, with minimal
// parenthesization.
std::string print_expr(const ExprPtr& e);

}  // namespace ratint
