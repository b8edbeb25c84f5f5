#pragma once

#include <variant>
#include <vector>

#include "remspec/bipoly.hpp"
#include "remspec/rng.hpp"

namespace remspec {

// ---------------------------------------------------------------------------
// Closed-1-form linear system. For f of bidegree (m, n), m, n >= 1, the
// pairs (g1, g2) with deg g1 <= (m-1, n), deg g2 <= (m, n-1) satisfying
//
//      f * d(g1)/dY - g1 * df/dY  =  f * d(g2)/dX - g2 * df/dX
//
// form a vector space whose dimension equals the number of absolutely
// irreducible factors of a square-free f (characteristic zero). The matrix
// below expresses that equation coefficient-wise: rows are indexed by the
// monomials X^i Y^j with i < 2m, j < 2n, columns by the basis monomials of
// g1 followed by those of g2 (the g2 block carries a minus sign).
// ---------------------------------------------------------------------------

inline int gao_row_count(int m, int n) { return 4 * m * n; }
inline int gao_col_count(int m, int n) { return m * (n + 1) + (m + 1) * n; }

// Builds the system matrix with the given caps; every term of f must
// satisfy deg_X <= m, deg_Y <= n. Entries are linear in the coefficients
// of f.
template <class Dom>
std::vector<std::vector<typename Dom::Elem>> gao_matrix(const BiPolyT<Dom>& f,
                                                        int m, int n) {
    const Dom& dom = f.dom();
    const int rows = gao_row_count(m, n);
    const int cols = gao_col_count(m, n);
    std::vector<std::vector<typename Dom::Elem>> mat(
        static_cast<std::size_t>(rows),
        std::vector<typename Dom::Elem>(static_cast<std::size_t>(cols), dom.zero()));

    auto scatter = [&](const BiPolyT<Dom>& poly, int col, bool negate) {
        for (const auto& [mono, c] : poly.terms()) {
            assert(mono.x < 2 * m && mono.y < 2 * n);
            int row = mono.x * 2 * n + mono.y;
            auto& cell = mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            cell = negate ? dom.sub(cell, c) : dom.add(cell, c);
        }
    };

    BiPolyT<Dom> fx = f.derivative(Var::X);
    BiPolyT<Dom> fy = f.derivative(Var::Y);
    int col = 0;
    for (int a = 0; a <= m - 1; ++a) {
        for (int b = 0; b <= n; ++b, ++col) {
            // f * d(X^a Y^b)/dY - X^a Y^b * df/dY
            if (b > 0) {
                scatter(f.mono_shifted(Mono{a, b - 1})
                            .scaled(dom.from_rational(Rational(b))),
                        col, false);
            }
            scatter(fy.mono_shifted(Mono{a, b}), col, true);
        }
    }
    for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= n - 1; ++b, ++col) {
            // -(f * d(X^a Y^b)/dX - X^a Y^b * df/dX)
            if (a > 0) {
                scatter(f.mono_shifted(Mono{a - 1, b})
                            .scaled(dom.from_rational(Rational(a))),
                        col, true);
            }
            scatter(fx.mono_shifted(Mono{a, b}), col, false);
        }
    }
    assert(col == cols);
    return mat;
}

// Exact rank by fraction-free elimination over the integers after per-row
// denominator clearing.
int matrix_rank(const std::vector<std::vector<Rational>>& mat, const RationalDomain&);

// Exact rank over an extension scope; decisions on pivot invertibility may
// throw SplitSignal.
int matrix_rank(std::vector<std::vector<UniPoly>> mat, const ExtDomain& dom);

// Number of absolutely irreducible factors of a square-free non-constant
// polynomial; exact over the rationals. Detects and rejects non-square-free
// input (gcd with the partial derivatives).
int absolute_factor_count(const BiPoly& f);

// The same count over a working scope. A branch-dependent answer is
// reported as the factorization of the modulus rather than resolved.
std::variant<int, SplitEvent> absolute_factor_count(const BiPolyExt& f);

// Decision-procedure form used inside branch executors (throws SplitSignal).
int absolute_factor_count_decided(const BiPolyExt& f);

// ---------------------------------------------------------------------------
// Pencil candidates.
// ---------------------------------------------------------------------------

// Monic square-free polynomial whose roots contain every finite chart value
// (1 : t) at which the member F - t*G is reducible, non-square-free, or
// degenerate. Computed from two random maximal minors of the pencil of
// system matrices (caps (d, d)) plus the non-square-free locus of the
// member family; `check_infinity` records that the direction (0 : 1) is
// never covered by the chart and must be analyzed separately.
//
// Requires deg F = deg G = d >= 2 with top forms not proportional (no member
// degenerates in degree). A pencil whose members are all reducible (a
// decomposable fraction) is reported as MathError(decomposable).
struct CandidateSet {
    UniPoly poly;
    bool check_infinity = true;
};

CandidateSet pencil_candidates(const BiPoly& f, const BiPoly& g, int d, Rng& rng);

// Certified gcd of integer-coefficient polynomials by modular images plus
// an exact division check; returns the primitive integer gcd with positive
// leading coefficient. Exposed for testing.
UniPoly modular_gcd_z(const UniPoly& a, const UniPoly& b);

} // namespace remspec
