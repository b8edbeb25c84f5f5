#include "remspec/bipoly.hpp"

namespace remspec {

BiPoly integer_primitive(const BiPoly& p) {
    if (p.syntactically_zero()) return p;
    Int den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        Int den = c.get_den();
        den_lcm = lcm(den_lcm, den);
    }
    Int num_gcd = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational scaled = c * Rational(den_lcm);
        num_gcd = gcd(num_gcd, Int(scaled.get_num()));
    }
    Rational factor = Rational(den_lcm) / Rational(num_gcd);
    return p.scaled(factor);
}

BiPoly normalized(const BiPoly& p) {
    BiPoly q = integer_primitive(p);
    if (q.syntactically_zero()) return q;
    if (q.terms().rbegin()->second < 0) q = q.scaled(Rational(-1));
    return q;
}

BiPolyExt lift_to_scope(const BiPoly& p, const ExtDomain& dom) {
    BiPolyExt out = BiPolyExt::zero(dom);
    for (const auto& [m, c] : p.terms()) {
        out.add_term(m, dom.from_rational(c));
    }
    return out;
}

std::vector<Rational> top_form(const BiPoly& p, int d) {
    std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.total() == d) out[static_cast<std::size_t>(m.x)] = c;
    }
    return out;
}

BiPoly projective_change(const BiPoly& f, int d,
                         const std::array<std::array<Rational, 3>, 3>& m) {
    Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det == 0) {
        throw MathError(MathError::Kind::precondition,
                        "projective change requires an invertible matrix");
    }
    if (f.syntactic_total_degree() > d) {
        throw MathError(MathError::Kind::precondition,
                        "homogenization degree below the actual degree");
    }
    RationalDomain dom;
    auto linear_form = [&](int row) {
        BiPoly l = BiPoly::zero(dom);
        l.add_term(Mono{1, 0}, m[static_cast<std::size_t>(row)][0]);
        l.add_term(Mono{0, 1}, m[static_cast<std::size_t>(row)][1]);
        l.add_term(Mono{0, 0}, m[static_cast<std::size_t>(row)][2]);
        return l;
    };
    BiPoly l1 = linear_form(0), l2 = linear_form(1), l3 = linear_form(2);

    // Cache powers up to d.
    auto powers = [&](const BiPoly& base) {
        std::vector<BiPoly> p{BiPoly::constant(dom, Rational(1))};
        for (int i = 1; i <= d; ++i) p.push_back(p.back() * base);
        return p;
    };
    auto p1 = powers(l1), p2 = powers(l2), p3 = powers(l3);

    BiPoly out = BiPoly::zero(dom);
    for (const auto& [mono, c] : f.terms()) {
        int zexp = d - mono.total();
        BiPoly term = p1[static_cast<std::size_t>(mono.x)] *
                      p2[static_cast<std::size_t>(mono.y)] *
                      p3[static_cast<std::size_t>(zexp)];
        out = out + term.scaled(c);
    }
    return out;
}

RationalFunctionPair RationalFunctionPair::make(const BiPoly& f, const BiPoly& g) {
    if (g.syntactically_zero()) {
        throw MathError(MathError::Kind::precondition,
                        "denominator must be non-zero");
    }
    if (f.syntactically_zero()) {
        throw MathError(MathError::Kind::dependent_pair,
                        "numerator must be non-zero (the fraction would be constant)");
    }
    BiPoly common = gcd_bi(f, g);
    if (common.syntactic_total_degree() > 0) {
        throw MathError(MathError::Kind::dependent_pair,
                        "numerator and denominator must be coprime");
    }
    int d = std::max(f.syntactic_total_degree(), g.syntactic_total_degree());
    if (d < 1) {
        throw MathError(MathError::Kind::dependent_pair,
                        "the fraction must be non-constant");
    }
    return RationalFunctionPair{f, g, d};
}

} // namespace remspec
