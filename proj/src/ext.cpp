#include "remspec/ext.hpp"

#include <cassert>

namespace remspec {

ExtScope ExtScope::make(const UniPoly& modulus) {
    if (modulus.degree() < 1) {
        throw MathError(MathError::Kind::precondition,
                        "scope modulus must have degree at least 1");
    }
    UniPoly q = modulus.monic();
    UniPoly sf = squarefree_part_uni(q);
    if (sf != q) {
        throw MathError(MathError::Kind::precondition,
                        "scope modulus must be square-free");
    }
    return ExtScope(std::move(q));
}

UniPoly ExtScope::generator() const { return reduce(UniPoly::variable()); }

UniPoly ExtScope::reduce(const UniPoly& a) const {
    assert(valid());
    if (a.degree() < q_->degree()) return a;
    return a.divrem(*q_).second;
}

bool ExtScope::same_modulus(const ExtScope& other) const {
    if (q_ == other.q_) return true;
    if (!q_ || !other.q_) return false;
    return *q_ == *other.q_;
}

namespace {

// Extended Euclid on (a, q): returns (g, u) with u*a == g (mod q), g monic.
std::pair<UniPoly, UniPoly> half_ext_gcd(const UniPoly& a, const UniPoly& q) {
    UniPoly r0 = q, r1 = a;
    UniPoly u0 = UniPoly::zero(), u1 = UniPoly::one();
    while (!r1.is_zero()) {
        auto [quot, rem] = r0.divrem(r1);
        UniPoly u2 = u0 - quot * u1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    Rational lc = r0.leading();
    return {r0.monic(), u0.scaled(Rational(1) / lc)};
}

} // namespace

std::variant<UniPoly, SplitEvent> ext_invert(const UniPoly& a, const ExtScope& scope) {
    UniPoly r = scope.reduce(a);
    if (r.is_zero()) {
        throw MathError(MathError::Kind::zero_divisor,
                        "cannot invert zero in the working scope");
    }
    auto [g, u] = half_ext_gcd(r, scope.modulus());
    if (g.degree() == 0) {
        return scope.reduce(u);
    }
    auto [cofactor, rem] = scope.modulus().divrem(g);
    assert(rem.is_zero());
    return SplitEvent{g, cofactor.monic()};
}

bool is_invertible_query(const UniPoly& a, const ExtScope& scope) {
    UniPoly r = scope.reduce(a);
    if (r.is_zero()) return false;
    return uni_gcd(r, scope.modulus()).degree() == 0;
}

UniPoly require_inverse(const UniPoly& a, const ExtScope& scope) {
    auto result = ext_invert(a, scope);
    if (auto* inv = std::get_if<UniPoly>(&result)) return *inv;
    throw SplitSignal{std::get<SplitEvent>(result)};
}

} // namespace remspec
