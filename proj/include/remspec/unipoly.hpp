#pragma once

#include <string>
#include <utility>
#include <vector>

#include "remspec/rational.hpp"

namespace remspec {

// Dense univariate polynomial over the rationals, coefficients stored from
// the constant term upward. The zero polynomial has an empty coefficient
// vector and degree() == -1. All non-zero polynomials keep a non-zero
// leading coefficient (normalization is enforced after every operation).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& constant);
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rational(1)); }
    static UniPoly variable(); // the monomial t

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    // Coefficient of t^i; zero outside the stored range.
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const UniPoly& other) const { return !(*this == other); }

    UniPoly scaled(const Rational& c) const;
    UniPoly shifted(int k) const; // multiply by t^k
    UniPoly pow(unsigned e) const;

    UniPoly derivative() const;
    Rational eval(const Rational& x) const;

    // Quotient/remainder by a non-zero divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;

    UniPoly monic() const; // requires non-zero

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic greatest common divisor; uni_gcd(0, 0) == 0.
UniPoly uni_gcd(UniPoly a, UniPoly b);

// Monic product of the distinct irreducible factors (characteristic zero,
// computed as p / gcd(p, p')). Requires a non-zero input.
UniPoly squarefree_part_uni(const UniPoly& p);

// Exact polynomial through the given sample points (distinct abscissae),
// computed by Newton divided differences.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

} // namespace remspec
