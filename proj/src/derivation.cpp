#include "remspec/derivation.hpp"

#include <cassert>

namespace remspec {

Derivation make_derivation(const BiPoly& a, const BiPoly& b) {
    if (a.syntactically_zero() && b.syntactically_zero()) {
        throw MathError(MathError::Kind::precondition,
                        "derivation must have a non-zero coefficient");
    }
    BiPoly common = gcd_bi(a, b);
    if (common.syntactic_total_degree() > 0) {
        throw MathError(MathError::Kind::precondition,
                        "derivation coefficients must be coprime");
    }
    int degree = std::max(a.syntactic_total_degree(), b.syntactic_total_degree());
    return Derivation{a, b, degree};
}

BiPoly apply(const Derivation& d, const BiPoly& p) {
    return d.a * p.derivative(Var::X) + d.b * p.derivative(Var::Y);
}

std::optional<BiPoly> cofactor_of(const Derivation& d, const BiPoly& p) {
    if (p.syntactic_total_degree() < 1) {
        throw MathError(MathError::Kind::precondition,
                        "invariant candidates must be non-constant");
    }
    BiPoly image = apply(d, p);
    if (image.syntactically_zero()) return BiPoly::zero(RationalDomain{});
    auto quotient = try_divide(image, p);
    // deg(D(p)) <= deg(p) + deg(D) - 1, so any exact quotient satisfies this.
    assert(!quotient || quotient->syntactic_total_degree() <= d.degree - 1);
    return quotient;
}

bool is_first_integral(const Derivation& d, const RationalFunctionPair& pair) {
    BiPoly lhs = apply(d, pair.numerator) * pair.denominator;
    BiPoly rhs = pair.numerator * apply(d, pair.denominator);
    return lhs == rhs;
}

namespace {

// Scale both coefficients by one positive rational making them jointly
// integer-primitive; then fix the overall sign by the first polynomial's
// leading coefficient (falling back to the second).
std::pair<BiPoly, BiPoly> joint_normalize(const BiPoly& a, const BiPoly& b) {
    Int den_lcm = 1;
    Int num_gcd = 0;
    for (const BiPoly* p : {&a, &b}) {
        for (const auto& [m, c] : p->terms()) {
            den_lcm = lcm(den_lcm, Int(c.get_den()));
        }
    }
    for (const BiPoly* p : {&a, &b}) {
        for (const auto& [m, c] : p->terms()) {
            Rational scaled = c * Rational(den_lcm);
            num_gcd = gcd(num_gcd, Int(scaled.get_num()));
        }
    }
    Rational factor = Rational(den_lcm) / Rational(num_gcd);
    const BiPoly& lead_src = a.syntactically_zero() ? b : a;
    if (lead_src.terms().rbegin()->second < 0) factor = -factor;
    return {a.scaled(factor), b.scaled(factor)};
}

} // namespace

Derivation jacobian_derivation(const RationalFunctionPair& pair) {
    const BiPoly& f = pair.numerator;
    const BiPoly& g = pair.denominator;
    BiPoly num_a = f.derivative(Var::Y) * g - f * g.derivative(Var::Y);
    BiPoly num_b = f.derivative(Var::X) * g - f * g.derivative(Var::X);
    if (num_a.syntactically_zero() && num_b.syntactically_zero()) {
        throw MathError(MathError::Kind::precondition,
                        "the fraction is constant along every direction");
    }
    BiPoly common = gcd_bi(num_a, num_b);
    BiPoly a = exact_divide(num_a, common);
    BiPoly b = -exact_divide(num_b, common);
    auto [na, nb] = joint_normalize(a, b);
    int degree = std::max(na.syntactic_total_degree(), nb.syntactic_total_degree());
    return Derivation{na, nb, degree};
}

} // namespace remspec
