#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "remspec/bipoly.hpp"
#include "remspec/derivation.hpp"
#include "remspec/newton.hpp"
#include "remspec/rng.hpp"

namespace remspec {

// ---------------------------------------------------------------------------
// Remarkable values of the pencil lambda*f - mu*g (degree-d homogenizations).
// A direction (lambda : mu) is remarkable when the homogeneous member is
// reducible or non-square-free, i.e. when it has at least two distinct
// absolutely irreducible factors or a factor of multiplicity >= 2 (counting
// the coordinate factor that appears when the affine member drops degree).
// ---------------------------------------------------------------------------

struct SpectrumEntry {
    // The direction (0 : 1), whose member is the denominator.
    bool at_infinity = false;
    // Monic square-free polynomial whose roots t give the directions
    // (1 : t) sharing the invariants below; zero polynomial at infinity.
    UniPoly modulus;
    // Number of directions collected in this entry (deg modulus, or 1).
    int conjugates = 1;
    // Distinct absolutely irreducible factors of the homogeneous member.
    int factor_count = 1;
    // d minus the total degree of the affine member (the multiplicity of
    // the degree-drop factor).
    int defect = 0;
    // The member is a pure power P^e with e >= 2.
    bool pure_power = false;
    // (degree sum, multiplicity) per multiplicity layer of the homogeneous
    // member, sorted by multiplicity; degree sums include the degree-drop
    // factor.
    std::vector<std::pair<int, int>> profile;
    // Degree of the affine member minus the degree of its square-free part:
    // this direction's per-conjugate contribution to deg R (the degree-drop
    // factor is excluded from the remainder product).
    int remainder_term = 0;
};

struct PencilReport {
    int degree = 0;
    std::uint64_t seed = 0;
    std::vector<SpectrumEntry> entries; // finite entries sorted, infinity last
    int rho = 0;            // sum of conjugates * (factor_count - 1)
    int sigma_size = 0;     // number of remarkable directions
    int gamma_size = 0;     // number of pure-power directions
    int remainder_degree = 0; // sum of conjugates * remainder_term
    // Coordinate change used for the candidate search (absent for degree 1).
    std::optional<std::array<std::array<Rational, 3>, 3>> change;
};

// Full spectrum computation. Throws MathError(decomposable) when the
// probabilistic gate concludes the fraction is composite, and
// MathError(singular_change) when no usable coordinate change is found.
// The seed fixes the coordinate change and all random choices.
PencilReport analyze_pencil(const RationalFunctionPair& pair, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Indecomposability gate.
// ---------------------------------------------------------------------------

enum class DecompositionVerdict {
    kIndecomposable,       // certified: some member is absolutely irreducible
    kLikelyDecomposable,   // every sampled member was reducible or degenerate
};

struct IndecomposabilityReport {
    DecompositionVerdict verdict = DecompositionVerdict::kLikelyDecomposable;
    bool certified = false;             // true iff verdict is kIndecomposable
    std::optional<Rational> witness;    // parameter of an irreducible member
    int trials_used = 0;
};

// Samples members f - t*g at random integer parameters. An absolutely
// irreducible member certifies indecomposability exactly; if every trial
// fails the fraction is reported (only) as likely decomposable.
IndecomposabilityReport indecomposability_test(const RationalFunctionPair& pair,
                                               int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Bound verification.
// ---------------------------------------------------------------------------

struct BoundsReport {
    PencilReport pencil;
    NewtonReport newton;          // polygon of the attached derivation
    int derivation_degree = 0;
    bool theorem_bound_holds = false;  // rho < B + 2
    bool sigma_chain_holds = false;    // |sigma| <= rho + |gamma|
    bool gamma_small_holds = false;    // |gamma| <= 3
    bool corollary_holds = false;      // |sigma| < B + 2 + |gamma|
    // Degree relation deg f + deg g - 1 = deg D + deg R. It depends on the
    // presentation of the pair, so a failure is informational only.
    bool poincare_holds = false;
    int poincare_lhs = 0;
    int poincare_rhs = 0;
    // True when one of the proved inequalities (not the degree relation)
    // fails; this would falsify the underlying theory.
    bool falsified = false;
};

// Analyzes the pencil, attaches the derivation (the one supplied, checked
// to admit f/g as a first integral, or else the canonical jacobian-style
// one), and evaluates every bound mechanically.
BoundsReport verify_remarkable_bounds(const RationalFunctionPair& pair,
                                      const std::optional<Derivation>& deriv,
                                      std::uint64_t seed);

// The degree relation alone (informational; presentation-dependent).
struct PoincareReport {
    int lhs = 0; // deg f + deg g - 1
    int rhs = 0; // derivation degree + deg R
    bool holds = false;
};

PoincareReport poincare_relation_check(const RationalFunctionPair& pair,
                                       const PencilReport& pencil,
                                       int derivation_degree);

} // namespace remspec
