#pragma once

#include <string>

#include "remspec/ext.hpp"
#include "remspec/rational.hpp"
#include "remspec/unipoly.hpp"

namespace remspec {

// Coefficient domains for the bivariate layer. Both expose the same
// interface; ExtDomain operations may throw SplitSignal from decision
// procedures (never from plain ring arithmetic).

struct RationalDomain {
    using Elem = Rational;
    static constexpr bool kMaySplit = false;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_rational(const Rational& r) const { return r; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) {
            throw MathError(MathError::Kind::zero_divisor, "division by zero");
        }
        return Rational(1) / a;
    }

    // Syntactic zero test; exact over the rationals.
    bool is_syntactic_zero(const Elem& a) const { return a == 0; }
    // Decision: is the element zero? Trivial here.
    bool decide_zero(const Elem& a) const { return a == 0; }
    // Non-splitting query: invertible on every branch?
    bool invertible_query(const Elem& a) const { return a != 0; }

    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool equal_syntactic(const Elem& a, const Elem& b) const { return a == b; }
    bool compatible(const RationalDomain&) const { return true; }
    std::string str(const Elem& a) const { return a.get_str(); }
};

struct ExtDomain {
    using Elem = UniPoly;
    static constexpr bool kMaySplit = true;

    ExtScope scope;

    ExtDomain() = default;
    explicit ExtDomain(ExtScope s) : scope(std::move(s)) {}

    Elem zero() const { return UniPoly::zero(); }
    Elem one() const { return UniPoly::one(); }
    Elem from_rational(const Rational& r) const { return UniPoly(r); }

    Elem add(const Elem& a, const Elem& b) const { return scope.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return scope.sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return scope.mul(a, b); }
    Elem neg(const Elem& a) const { return scope.reduce(-a); }
    Elem inv(const Elem& a) const { return require_inverse(a, scope); }

    bool is_syntactic_zero(const Elem& a) const { return a.is_zero(); }

    // Decision: a reduced non-zero representative is either invertible on
    // every branch (non-zero) or the branches disagree, which splits.
    bool decide_zero(const Elem& a) const {
        if (a.is_zero()) return true;
        if (is_invertible_query(a, scope)) return false;
        (void)require_inverse(a, scope); // throws SplitSignal
        return false;                    // unreachable
    }

    bool invertible_query(const Elem& a) const { return is_invertible_query(a, scope); }

    bool equal(const Elem& a, const Elem& b) const {
        return decide_zero(scope.sub(a, b));
    }
    bool equal_syntactic(const Elem& a, const Elem& b) const { return a == b; }
    bool compatible(const ExtDomain& other) const {
        return scope.same_modulus(other.scope);
    }
    std::string str(const Elem& a) const { return a.str("t"); }
};

} // namespace remspec
