#pragma once

#include <string_view>

#include "dgla/expr.hpp"
#include "dgla/rational.hpp"

namespace dgla {

/// Parses the expression grammar
///   expr     := term (('+'|'-') term)*
///   term     := [rational '*'] factor
///   factor   := generator | '[' expr ',' expr ']' | '(' expr ')'
///   rational := ['-'] digits ['/' digits]
/// plus "0" for the zero element and a unary minus before a factor.
/// Throws parse_error with the offending position.
Expr parse_expr(std::string_view source);

/// Parses "p" or "p/q"; throws parse_error.
Rational parse_rational(std::string_view source);

} // namespace dgla
