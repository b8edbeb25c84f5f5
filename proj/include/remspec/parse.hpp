#pragma once

#include <string>

#include "remspec/bipoly.hpp"
#include "remspec/unipoly.hpp"

namespace remspec {

// Parses an expression in the variables X and Y built from integers,
// fractions (p/q), '+', '-', '*', '^' and parentheses. Multiplication is
// always explicit; exponents are non-negative integers. Throws ParseError
// with the byte offset of the first offending token.
BiPoly parse_bipoly(const std::string& text);

// Same grammar restricted to the single variable t.
UniPoly parse_unipoly(const std::string& text);

// Canonical rendering: terms in decreasing graded order, explicit '*'
// between coefficient and variables, '^' only for exponents >= 2. The
// output parses back to the identical polynomial.
std::string to_string(const BiPoly& p);

} // namespace remspec
