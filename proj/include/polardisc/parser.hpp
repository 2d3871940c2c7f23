#pragma once

#include <string>

#include "polardisc/bipoly.hpp"

namespace polardisc {

// Grammar: sums of products of rational constants, variables from
// {x, y, u, v, t}, parentheses and nonnegative integer powers. Division is
// allowed by nonzero constants only. Errors carry the character position.
//
// The result uses the variable pair (x, y) unless only u and v occur.
BiPoly parse_polynomial(const std::string& text);

// Same grammar, forcing the variable pair (v0, v1); other variables are errors.
BiPoly parse_polynomial(const std::string& text, const std::string& v0, const std::string& v1);

// Univariate polynomial in `var`.
QPoly parse_univariate(const std::string& text, const std::string& var);

}  // namespace polardisc
