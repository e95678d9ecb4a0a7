#pragma once

#include <string>
#include <string_view>

#include "braidshear/polynomial.hpp"

namespace braidshear {

/// Renders terms in decreasing grlex order, e.g.
/// "a_{1,3}*a_{2,4} + 2*a_{1,2}^2 - 1". Unit coefficients are omitted on
/// non-constant terms; the zero polynomial renders as "0".
std::string format_polynomial(const Polynomial& p);

std::string format_variable(VarId var);

/// Inverse of format_polynomial. Also accepts explicit unit coefficients,
/// arbitrary term order and extra whitespace. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

}  // namespace braidshear
