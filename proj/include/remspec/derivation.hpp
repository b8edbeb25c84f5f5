#pragma once

#include <optional>

#include "remspec/bipoly.hpp"

namespace remspec {

// Planar polynomial derivation D = a*d/dX + b*d/dY with gcd(a, b) = 1.
struct Derivation {
    BiPoly a;
    BiPoly b;
    int degree; // max of the two total degrees
};

// Validates the coprimality contract and that (a, b) != (0, 0).
Derivation make_derivation(const BiPoly& a, const BiPoly& b);

// D(p) = a * dp/dX + b * dp/dY.
BiPoly apply(const Derivation& d, const BiPoly& p);

// Cofactor of an invariant polynomial: the exact quotient D(p) / p when p
// divides D(p) (then deg cofactor <= deg D - 1), std::nullopt otherwise.
// Requires p non-constant.
std::optional<BiPoly> cofactor_of(const Derivation& d, const BiPoly& p);

// Does D annihilate the fraction? Exact test of D(f)*g == f*D(g).
bool is_first_integral(const Derivation& d, const RationalFunctionPair& pair);

// The reduced derivation annihilating f/g, built from the partial
// derivatives of the fraction: a = (f_Y*g - f*g_Y)/G, b = -(f_X*g - f*g_X)/G
// with G the gcd of the two numerators; scaled to coprime integer
// coefficients with a positive leading term.
Derivation jacobian_derivation(const RationalFunctionPair& pair);

} // namespace remspec
