#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "remspec/corpus.hpp"
#include "remspec/derivation.hpp"
#include "remspec/parse.hpp"
#include "remspec/rng.hpp"

using namespace remspec;

namespace {

const RationalDomain kQ{};

BiPoly P(const std::string& s) { return parse_bipoly(s); }

BiPoly random_bipoly(Rng& rng, int max_degree, int max_terms) {
    BiPoly p = BiPoly::zero(kQ);
    const int terms = static_cast<int>(rng_range(rng, 1, max_terms));
    for (int i = 0; i < terms; ++i) {
        int ex = static_cast<int>(rng_range(rng, 0, max_degree));
        int ey = static_cast<int>(rng_range(rng, 0, max_degree - ex));
        long num = rng_range(rng, -9, 9);
        p.add_term(Mono{ex, ey}, Rational(num));
    }
    return p;
}

BiPoly random_nonconstant(Rng& rng, int max_degree, int max_terms) {
    for (;;) {
        BiPoly p = random_bipoly(rng, max_degree, max_terms);
        if (p.syntactic_total_degree() >= 1) return p;
    }
}

Derivation random_derivation(Rng& rng, int max_degree) {
    for (;;) {
        BiPoly a = random_bipoly(rng, max_degree, 4);
        BiPoly b = random_bipoly(rng, max_degree, 4);
        if (a.syntactically_zero() && b.syntactically_zero()) continue;
        if (!gcd_bi(a, b).decided_constant()) continue;
        return make_derivation(a, b);
    }
}

} // namespace

TEST_CASE("constructor validates its contract") {
    CHECK_THROWS_AS(make_derivation(P("X*Y"), P("X^2")), MathError);
    CHECK_THROWS_AS(make_derivation(P("0"), P("0")), MathError);
    Derivation d = make_derivation(P("X^2 - 1"), P("-(2*X*Y + 1)"));
    CHECK(d.degree == 2);
    // Constant components are fine as long as the pair is coprime.
    CHECK(make_derivation(P("1"), P("0")).degree == 0);
}

TEST_CASE("application and the Leibniz rule") {
    Derivation d = make_derivation(P("X^2 - 1"), P("-(2*X*Y + 1)"));
    CHECK(apply(d, P("X")) == P("X^2 - 1"));
    CHECK(apply(d, P("Y")) == P("-(2*X*Y + 1)"));
    CHECK(apply(d, P("7")).syntactically_zero());

    // D(pq) = p D(q) + q D(p) and D(p + q) = D(p) + D(q), 100 seeded triples.
    Rng rng(314);
    for (int i = 0; i < 100; ++i) {
        Derivation rd = random_derivation(rng, 3);
        BiPoly p = random_bipoly(rng, 3, 4);
        BiPoly q = random_bipoly(rng, 3, 4);
        CHECK(apply(rd, p * q) == p * apply(rd, q) + q * apply(rd, p));
        CHECK(apply(rd, p + q) == apply(rd, p) + apply(rd, q));
    }
}

TEST_CASE("cofactors of invariant polynomials add across products") {
    // Derivations built to leave both p and q invariant:
    //   D = (2 p_Y q + p q_Y) d/dX - (2 p_X q + p q_X) d/dY
    // annihilates p^2 q, with non-trivial cofactors on p, q and p*q.
    Rng rng(2718);
    int done = 0;
    while (done < 50) {
        BiPoly p = random_nonconstant(rng, 2, 3);
        BiPoly q = random_nonconstant(rng, 2, 3);
        if (!gcd_bi(p, q).decided_constant()) continue;
        BiPoly a = p.derivative(Var::Y).scaled(Rational(2)) * q +
                   p * q.derivative(Var::Y);
        BiPoly b = -(p.derivative(Var::X).scaled(Rational(2)) * q +
                     p * q.derivative(Var::X));
        if (a.syntactically_zero() && b.syntactically_zero()) continue;
        if (!gcd_bi(a, b).decided_constant()) continue;
        Derivation d = make_derivation(a, b);

        auto cp = cofactor_of(d, p);
        auto cq = cofactor_of(d, q);
        auto cpq = cofactor_of(d, p * q);
        REQUIRE(cp.has_value());
        REQUIRE(cq.has_value());
        REQUIRE(cpq.has_value());
        CHECK(*cpq == *cp + *cq);
        // p^2 q is a first integral of this derivation by construction.
        CHECK(*cp + *cp + *cq == BiPoly::zero(kQ));
        ++done;
    }

    // Non-invariant polynomials are reported as such.
    Derivation d = make_derivation(P("X^2 - 1"), P("-(2*X*Y + 1)"));
    CHECK(!cofactor_of(d, P("Y")).has_value());
    CHECK(cofactor_of(d, P("X - 1")).has_value());
    CHECK(*cofactor_of(d, P("X - 1")) == P("X + 1"));
    CHECK(*cofactor_of(d, P("X^2 - 1")) == P("2*X"));
}

TEST_CASE("reduced derivation of a fraction") {
    // The closed forms pinned by the two example families.
    SharpFamily fam2 = sharp_family(2);
    Derivation j2 = jacobian_derivation(fam2.pair);
    CHECK(j2.a == fam2.derivation.a);
    CHECK(j2.b == fam2.derivation.b);
    SharpFamily fam3 = sharp_family(3);
    Derivation j3 = jacobian_derivation(fam3.pair);
    CHECK(j3.a == fam3.derivation.a);
    CHECK(j3.b == fam3.derivation.b);

    Derivation w = jacobian_derivation(RationalFunctionPair::make(P("Y"), P("X^2")));
    CHECK(w.a == P("X"));
    CHECK(w.b == P("2*Y"));
    CHECK(w.degree == 1);
}

TEST_CASE("reduced derivation postconditions on seeded fractions") {
    Rng rng(161803);
    int done = 0;
    while (done < 50) {
        BiPoly f = random_bipoly(rng, 4, 5);
        BiPoly g = random_bipoly(rng, 4, 5);
        RationalFunctionPair pair{BiPoly::zero(kQ), BiPoly::zero(kQ), 0};
        try {
            pair = RationalFunctionPair::make(f, g);
        } catch (const MathError&) {
            continue; // zero, constant, or non-coprime draw
        }
        Derivation d = jacobian_derivation(pair);
        ++done;

        CHECK(is_first_integral(d, pair));
        CHECK(gcd_bi(d.a, d.b).decided_constant());
        CHECK(d.degree == std::max(d.a.syntactic_total_degree(),
                                   d.b.syntactic_total_degree()));
        // Both halves of the fraction are invariant with the same cofactor.
        if (pair.numerator.syntactic_total_degree() >= 1 &&
            pair.denominator.syntactic_total_degree() >= 1) {
            auto cf = cofactor_of(d, pair.numerator);
            auto cg = cofactor_of(d, pair.denominator);
            REQUIRE(cf.has_value());
            REQUIRE(cg.has_value());
            CHECK(*cf == *cg);
        }
    }
}

TEST_CASE("first-integral test distinguishes") {
    SharpFamily fam = sharp_family(2);
    CHECK(is_first_integral(fam.derivation, fam.pair));
    CHECK(!is_first_integral(fam.derivation,
                             RationalFunctionPair::make(P("X"), P("1"))));
    CHECK(!is_first_integral(fam.derivation,
                             RationalFunctionPair::make(P("Y"), P("X"))));
}
