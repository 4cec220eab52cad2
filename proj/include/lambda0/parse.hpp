#pragma once

#include "lambda0/poly.hpp"

#include <string_view>

namespace lambda0 {

/// Parses an expression over t, u, v, s2, s3, a and x<digits> with integer or
/// rational literals and the operators + - * ^ and parentheses. Implicit
/// multiplication is rejected; ^ takes a nonnegative integer literal.
/// x0, x1 and x2 are replaced by 0, 2t and t^2.
///
/// Throws ParseError carrying the offending position.
Poly parse_expr(std::string_view text);

}  // namespace lambda0
