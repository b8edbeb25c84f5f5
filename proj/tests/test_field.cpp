#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "remspec/domain.hpp"
#include "remspec/ext.hpp"
#include "remspec/rng.hpp"
#include "remspec/unipoly.hpp"

using namespace remspec;

namespace {

UniPoly up(std::vector<long> coeffs) {
    std::vector<Rational> rs;
    rs.reserve(coeffs.size());
    for (long c : coeffs) rs.emplace_back(c);
    return UniPoly(std::move(rs));
}

UniPoly random_poly(Rng& rng, int max_degree) {
    const int deg = static_cast<int>(rng_range(rng, 0, max_degree));
    std::vector<Rational> coeffs;
    for (int i = 0; i <= deg; ++i) {
        long num = rng_range(rng, -50, 50);
        long den = rng_range(rng, 1, 10);
        coeffs.push_back(Rational(num) / Rational(den));
    }
    if (coeffs.back() == 0) coeffs.back() = Rational(1);
    return UniPoly(std::move(coeffs));
}

} // namespace

TEST_CASE("arithmetic and normalization") {
    const UniPoly t = UniPoly::variable();
    CHECK(UniPoly::zero().degree() == -1);
    CHECK(UniPoly::zero().is_zero());
    CHECK(UniPoly::one().is_one());
    CHECK(t.degree() == 1);

    // (t+1)(t-1) = t^2 - 1
    CHECK((t + UniPoly::one()) * (t - UniPoly::one()) == up({-1, 0, 1}));
    // Cancellation trims the representation down to the true degree.
    CHECK((up({1, 2, 3}) - up({0, 0, 3})).degree() == 1);
    CHECK((up({1, 1}) - up({1, 1})).is_zero());

    CHECK(up({3, 0, 1}).scaled(Rational(2)) == up({6, 0, 2}));
    CHECK(up({1, 2}).shifted(2) == up({0, 0, 1, 2}));
    CHECK(up({1, 1}).pow(3) == up({1, 3, 3, 1}));
    CHECK(up({5, 0, 0, 2}).derivative() == up({0, 0, 6}));
    CHECK(up({1, -2, 1}).eval(Rational(3)) == Rational(4));
    CHECK(up({2, 4}).monic() == up({1, 2}).scaled(Rational(1) / Rational(2)));
}

TEST_CASE("division with remainder") {
    // t^3 + 1 = (t + 1)(t^2 - t + 1)
    auto [q, r] = up({1, 0, 0, 1}).divrem(up({1, 1}));
    CHECK(q == up({1, -1, 1}));
    CHECK(r.is_zero());

    // t^4 + 3 by t^2 + t: quotient t^2 - t + 1, remainder -t + 3.
    auto [q2, r2] = up({3, 0, 0, 0, 1}).divrem(up({0, 1, 1}));
    CHECK(q2 == up({1, -1, 1}));
    CHECK(r2 == up({3, -1}));

    // Identity a = q*b + r on random inputs, with deg r < deg b.
    Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
        UniPoly a = random_poly(rng, 8);
        UniPoly b = random_poly(rng, 4);
        auto [qq, rr] = a.divrem(b);
        CHECK(qq * b + rr == a);
        CHECK(rr.degree() < b.degree());
    }
}

TEST_CASE("gcd is monic and correct") {
    // gcd(t^2 - 1, (t-1)^2) = t - 1
    CHECK(uni_gcd(up({-1, 0, 1}), up({1, -2, 1})) == up({-1, 1}));
    CHECK(uni_gcd(UniPoly::zero(), UniPoly::zero()).is_zero());
    CHECK(uni_gcd(up({2, 4}), UniPoly::zero()) == up({1, 2}).scaled(Rational(1, 2)));
    // Coprime inputs give 1.
    CHECK(uni_gcd(up({1, 1}), up({2, 1})).is_one());

    // gcd(ab, ac) is a (times the gcd of the cofactors) on random products.
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        UniPoly a = random_poly(rng, 3);
        UniPoly b = random_poly(rng, 3);
        UniPoly g = uni_gcd(a * b, a * b.derivative() + a);
        // a divides both arguments, so it divides the gcd.
        if (!a.is_zero()) {
            auto [q, r] = g.divrem(a.monic());
            (void)q;
            CHECK(r.is_zero());
        }
    }
}

TEST_CASE("square-free part drops multiplicities") {
    // (t-1)^2 (t+2) -> (t-1)(t+2)
    UniPoly p = up({-1, 1}) * up({-1, 1}) * up({2, 1});
    CHECK(squarefree_part_uni(p) == up({-2, 1, 1}));
    CHECK(squarefree_part_uni(up({4})).is_one()); // constants have no roots
    // Already square-free input is returned monic.
    CHECK(squarefree_part_uni(up({-2, 0, 2})) == up({-1, 0, 1}));
}

TEST_CASE("interpolation round-trips") {
    Rng rng(99);
    for (int i = 0; i < 60; ++i) {
        UniPoly p = random_poly(rng, 6);
        std::vector<Rational> xs, ys;
        for (int k = 0; k <= p.degree() + 1; ++k) {
            xs.emplace_back(k);
            ys.push_back(p.eval(Rational(k)));
        }
        CHECK(interpolate(xs, ys) == p);
    }
    // Rational abscissae as well.
    std::vector<Rational> xs{Rational(1, 2), Rational(-1, 3), Rational(0)};
    UniPoly p = up({1, -3, 2});
    std::vector<Rational> ys;
    for (const auto& x : xs) ys.push_back(p.eval(x));
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("extension scope arithmetic") {
    // Q[t]/(t^2 - 2): t is invertible with inverse t/2.
    ExtScope s = ExtScope::make(up({-2, 0, 1}));
    const UniPoly t = UniPoly::variable();
    CHECK(s.degree() == 2);
    CHECK(s.reduce(t * t) == up({2}));

    auto inv = ext_invert(t, s);
    REQUIRE(std::holds_alternative<UniPoly>(inv));
    CHECK(s.mul(std::get<UniPoly>(inv), t).is_one());
    CHECK(std::get<UniPoly>(inv) == t.scaled(Rational(1, 2)));

    // (1 + t)(1 + t) = 3 + 2t in this scope.
    CHECK(s.mul(up({1, 1}), up({1, 1})) == up({3, 2}));
    CHECK(is_invertible_query(t, s));
    CHECK(require_inverse(up({1, 1}), s) == up({-1, 1})); // (1+t)(t-1) = 1
}

TEST_CASE("zero divisors split the modulus") {
    // Q[t]/(t^2 - 1): t - 1 is a zero divisor.
    ExtScope s = ExtScope::make(up({-1, 0, 1}));
    auto inv = ext_invert(up({-1, 1}), s);
    REQUIRE(std::holds_alternative<SplitEvent>(inv));
    const SplitEvent& e = std::get<SplitEvent>(inv);
    CHECK(e.left * e.right == up({-1, 0, 1}));
    CHECK(e.left.degree() >= 1);
    CHECK(e.right.degree() >= 1);

    CHECK(!is_invertible_query(up({-1, 1}), s));
    CHECK_THROWS_AS(require_inverse(up({-1, 1}), s), SplitSignal);
    CHECK_THROWS_AS(require_inverse(UniPoly::zero(), s), MathError);
}

TEST_CASE("branch executor refines to coprime factors") {
    // t^3 - t = t (t-1) (t+1); asking whether t^2 - t vanishes separates
    // the branches {t, t-1} (yes) from {t+1} (no).
    ExtScope root = ExtScope::make(up({0, -1, 0, 1}));
    std::function<bool(const ExtScope&)> body = [](const ExtScope& s) {
        ExtDomain dom(s);
        return dom.decide_zero(s.reduce(up({0, -1, 1})));
    };
    auto branches = run_branches(root, body);
    REQUIRE(branches.size() >= 2);

    UniPoly product = UniPoly::one();
    for (const auto& [scope, vanished] : branches) {
        product = product * scope.modulus();
        // The reported decision matches divisibility of t^2 - t by the
        // branch modulus.
        auto [q, r] = up({0, -1, 1}).divrem(scope.modulus());
        (void)q;
        CHECK(vanished == r.is_zero());
    }
    CHECK(product.monic() == up({0, -1, 0, 1}));

    // Branch moduli are pairwise coprime.
    for (std::size_t i = 0; i < branches.size(); ++i) {
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            CHECK(uni_gcd(branches[i].first.modulus(),
                          branches[j].first.modulus())
                      .is_one());
        }
    }
}

TEST_CASE("branch executor agrees with per-root evaluation") {
    // Random square-free products of distinct linear factors: deciding
    // invertibility of a random element must match root-by-root evaluation.
    Rng rng(4242);
    for (int iter = 0; iter < 30; ++iter) {
        // Distinct roots in [-5, 5].
        std::vector<long> roots;
        while (roots.size() < 3) {
            long r = rng_range(rng, -5, 5);
            bool fresh = true;
            for (long s : roots) fresh = fresh && s != r;
            if (fresh) roots.push_back(r);
        }
        UniPoly q = UniPoly::one();
        for (long r : roots) q = q * up({-r, 1});
        UniPoly a = random_poly(rng, 2);

        std::function<bool(const ExtScope&)> body = [&a](const ExtScope& s) {
            ExtDomain dom(s);
            return dom.decide_zero(s.reduce(a));
        };
        auto branches = run_branches(ExtScope::make(q), body);

        for (long r : roots) {
            // Find the branch whose modulus vanishes at this root.
            bool found = false;
            for (const auto& [scope, vanished] : branches) {
                if (scope.modulus().eval(Rational(r)) == 0) {
                    CHECK(vanished == (a.eval(Rational(r)) == 0));
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
}
