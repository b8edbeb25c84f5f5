#include "remspec/ruppert.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>

#include "remspec/errors.hpp"

namespace remspec {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// Word-size modular arithmetic. All primes are below 2^31, so products of
// two residues fit in 64 bits.
// ---------------------------------------------------------------------------

u64 norm_mod(i64 v, u64 p) {
    i64 r = v % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    return static_cast<u64>(r);
}

u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s >= p) s -= p;
    return s;
}

u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mulm(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1u) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1u;
    }
    return r;
}

u64 invm(u64 a, u64 p) {
    assert(a % p != 0);
    return powm(a, p - 2, p);
}

// Deterministic Miller-Rabin; the base set {2, 3, 5, 7} is exact below
// 3'215'031'751, which covers every candidate we test (all < 2^31 + 1).
bool is_prime_u32(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull}) {
        u64 x = powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulm(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Fixed descending stream of 31-bit primes; deterministic by construction.
struct PrimeStream {
    u64 cursor = (1ull << 31) + 1;
    u64 next() {
        do {
            cursor -= 2;
        } while (!is_prime_u32(cursor));
        return cursor;
    }
};

u64 reduce_int(const Int& v, u64 p) {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

// ---------------------------------------------------------------------------
// Dense matrices over F_p.
// ---------------------------------------------------------------------------

struct PMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<u64> a;

    PMatrix() = default;
    PMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    u64& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    u64 at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(i) * cols,
                         a.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols,
                         a.begin() + static_cast<std::ptrdiff_t>(j) * cols);
    }
};

u64 det_mod_p(PMatrix m, u64 p) {
    const int n = m.rows;
    assert(n == m.cols);
    u64 det = 1 % p;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i) {
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return 0;
        if (piv != c) {
            m.swap_rows(piv, c);
            det = p - det; // det was non-zero, stays in (0, p)
        }
        det = mulm(det, m.at(c, c), p);
        u64 inv = invm(m.at(c, c), p);
        for (int i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            u64 f = mulm(m.at(i, c), inv, p);
            for (int j = c; j < n; ++j) {
                m.at(i, j) = subm(m.at(i, j), mulm(f, m.at(c, j), p), p);
            }
        }
    }
    return det;
}

// Row-reduces and reports the pivot positions in the caller's indexing
// (rows are tracked through swaps). A pivot found modulo p certifies that
// the corresponding minor of the integer matrix is non-zero.
int rank_pivots_mod_p(PMatrix m, u64 p, std::vector<int>* prows,
                      std::vector<int>* pcols) {
    std::vector<int> rowid(static_cast<std::size_t>(m.rows));
    std::iota(rowid.begin(), rowid.end(), 0);
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) {
            m.swap_rows(piv, r);
            std::swap(rowid[static_cast<std::size_t>(piv)],
                      rowid[static_cast<std::size_t>(r)]);
        }
        if (prows) prows->push_back(rowid[static_cast<std::size_t>(r)]);
        if (pcols) pcols->push_back(c);
        u64 inv = invm(m.at(r, c), p);
        for (int i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            u64 f = mulm(m.at(i, c), inv, p);
            for (int j = c; j < m.cols; ++j) {
                m.at(i, j) = subm(m.at(i, j), mulm(f, m.at(r, j), p), p);
            }
        }
        ++r;
    }
    return r;
}

// Newton interpolation modulo p; xs must be pairwise distinct modulo p.
// Returns the coefficient vector (low degree first, length == xs.size()).
std::vector<u64> interp_mod_p(const std::vector<i64>& xs, std::vector<u64> vals,
                              u64 p) {
    const int n = static_cast<int>(vals.size());
    assert(static_cast<int>(xs.size()) == n && n >= 1);
    std::vector<u64> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = norm_mod(xs[static_cast<std::size_t>(i)], p);
    for (int j = 1; j < n; ++j) {
        for (int i = n - 1; i >= j; --i) {
            u64 num = subm(vals[static_cast<std::size_t>(i)], vals[static_cast<std::size_t>(i - 1)], p);
            u64 den = subm(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i - j)], p);
            vals[static_cast<std::size_t>(i)] = mulm(num, invm(den, p), p);
        }
    }
    std::vector<u64> poly{vals[static_cast<std::size_t>(n - 1)]};
    for (int i = n - 2; i >= 0; --i) {
        std::vector<u64> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = addm(next[k + 1], poly[k], p);
            next[k] = subm(next[k], mulm(x[static_cast<std::size_t>(i)], poly[k], p), p);
        }
        next[0] = addm(next[0], vals[static_cast<std::size_t>(i)], p);
        poly = std::move(next);
    }
    poly.resize(static_cast<std::size_t>(n), 0);
    return poly;
}

// Monic gcd of dense polynomials over F_p (low degree first).
std::vector<u64> gcd_mod_p(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto trim = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        u64 lead_inv = invm(b.back(), p);
        for (int k = static_cast<int>(a.size()) - 1;
             k >= static_cast<int>(b.size()) - 1; --k) {
            u64 c = a[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            u64 f = mulm(c, lead_inv, p);
            int off = k - (static_cast<int>(b.size()) - 1);
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::size_t idx = static_cast<std::size_t>(off) + j;
                a[idx] = subm(a[idx], mulm(f, b[j], p), p);
            }
        }
        trim(a);
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = invm(a.back(), p);
        for (auto& c : a) c = mulm(c, inv, p);
    }
    return a;
}

// ---------------------------------------------------------------------------
// Exact integer helpers.
// ---------------------------------------------------------------------------

// Chinese-remainder accumulator with symmetric lift.
struct CrtValue {
    Int value{0};
    Int modulus{1};

    void absorb(u64 residue, u64 p) {
        u64 cur = mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(p));
        u64 minv = invm(reduce_int(modulus, p), p);
        u64 t = mulm(subm(residue, cur, p), minv, p);
        value += modulus * static_cast<unsigned long>(t);
        modulus *= static_cast<unsigned long>(p);
    }

    Int symmetric() const {
        Int v = value;
        if (v * 2 > modulus) v -= modulus;
        return v;
    }
};

int bareiss_rank(std::vector<std::vector<Int>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows > 0 ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    Int prev(1);
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(r)]);
        auto& pivot_row = m[static_cast<std::size_t>(r)];
        // Every row below the pivot must be rescaled, zero head or not:
        // the next step divides by this pivot and relies on the scaling.
        for (int i = r + 1; i < rows; ++i) {
            auto& row = m[static_cast<std::size_t>(i)];
            const Int head = row[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < cols; ++j) {
                Int t = pivot_row[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(j)] -
                        head * pivot_row[static_cast<std::size_t>(j)];
                mpz_divexact(row[static_cast<std::size_t>(j)].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = pivot_row[static_cast<std::size_t>(c)];
        ++r;
    }
    return r;
}

// Primitive integer coefficient vector (low degree first, positive leading
// coefficient) of a non-zero rational polynomial.
std::vector<Int> z_primitive_vec(const UniPoly& p) {
    assert(!p.is_zero());
    Int den(1);
    for (const auto& c : p.coeffs()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    Int content(0);
    for (const auto& c : p.coeffs()) {
        Int v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    if (out.back() < 0) {
        for (auto& v : out) v = -v;
    }
    return out;
}

UniPoly poly_from_z(const std::vector<Int>& v) {
    std::vector<Rational> cs;
    cs.reserve(v.size());
    for (const auto& c : v) cs.emplace_back(c);
    return UniPoly(std::move(cs));
}

bool divides_exactly(const UniPoly& divisor, const UniPoly& dividend) {
    if (dividend.is_zero()) return true;
    if (divisor.degree() > dividend.degree()) return false;
    return dividend.divrem(divisor).second.is_zero();
}

std::vector<u64> reduce_vec(const std::vector<Int>& v, u64 p) {
    std::vector<u64> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = reduce_int(v[i], p);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

} // namespace

UniPoly modular_gcd_z(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return UniPoly::zero();
    if (a.is_zero()) return poly_from_z(z_primitive_vec(b));
    if (b.is_zero()) return poly_from_z(z_primitive_vec(a));
    std::vector<Int> va = z_primitive_vec(a);
    std::vector<Int> vb = z_primitive_vec(b);
    if (va.size() == 1 || vb.size() == 1) return UniPoly::one();

    Int lcg(0);
    mpz_gcd(lcg.get_mpz_t(), va.back().get_mpz_t(), vb.back().get_mpz_t());

    PrimeStream primes;
    int best_deg = std::numeric_limits<int>::max();
    std::vector<CrtValue> lifted;
    for (int iter = 0; iter < 64; ++iter) {
        u64 p = primes.next();
        if (reduce_int(va.back(), p) == 0 || reduce_int(vb.back(), p) == 0) continue;
        std::vector<u64> gp = gcd_mod_p(reduce_vec(va, p), reduce_vec(vb, p), p);
        const int dg = static_cast<int>(gp.size()) - 1;
        if (dg == 0) return UniPoly::one();
        if (dg > best_deg) continue; // unlucky prime
        if (dg < best_deg) {
            best_deg = dg;
            lifted.assign(static_cast<std::size_t>(dg) + 1, CrtValue{});
        }
        const u64 scale = reduce_int(lcg, p);
        for (std::size_t k = 0; k < gp.size(); ++k) {
            lifted[k].absorb(mulm(gp[k], scale, p), p);
        }
        // Symmetric lift, made primitive, then certified by exact division.
        std::vector<Int> cand(lifted.size());
        Int content(0);
        for (std::size_t k = 0; k < lifted.size(); ++k) {
            cand[k] = lifted[k].symmetric();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), cand[k].get_mpz_t());
        }
        if (content == 0) continue;
        for (auto& v : cand) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
        }
        if (cand.back() == 0) continue;
        if (cand.back() < 0) {
            for (auto& v : cand) v = -v;
        }
        UniPoly g = poly_from_z(cand);
        if (divides_exactly(g, poly_from_z(va)) && divides_exactly(g, poly_from_z(vb))) {
            return g;
        }
    }
    // Unreachable in practice; exact fallback.
    UniPoly g = uni_gcd(a, b);
    return g.is_zero() ? g : poly_from_z(z_primitive_vec(g));
}

namespace {

// Square-free part of a non-zero integer polynomial, monic over Q.
UniPoly squarefree_part_z(const UniPoly& p) {
    assert(!p.is_zero());
    if (p.degree() == 0) return UniPoly::one();
    UniPoly prim = poly_from_z(z_primitive_vec(p));
    UniPoly g = modular_gcd_z(prim, prim.derivative());
    if (g.degree() <= 0) return prim.monic();
    auto [q, r] = prim.divrem(g);
    assert(r.is_zero());
    return q.monic();
}

} // namespace

// ---------------------------------------------------------------------------
// Rank over the two coefficient domains.
// ---------------------------------------------------------------------------

int matrix_rank(const std::vector<std::vector<Rational>>& mat, const RationalDomain&) {
    std::vector<std::vector<Int>> zm;
    zm.reserve(mat.size());
    for (const auto& row : mat) {
        Int den(1);
        for (const auto& c : row) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        }
        std::vector<Int> zr;
        zr.reserve(row.size());
        for (const auto& c : row) zr.push_back(c.get_num() * (den / c.get_den()));
        zm.push_back(std::move(zr));
    }
    return bareiss_rank(std::move(zm));
}

int matrix_rank(std::vector<std::vector<UniPoly>> mat, const ExtDomain& dom) {
    const int rows = static_cast<int>(mat.size());
    const int cols = rows > 0 ? static_cast<int>(mat[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (dom.invertible_query(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            // No branch-independent pivot: every remaining entry must be
            // decided; a zero divisor splits the scope here.
            for (int i = r; i < rows; ++i) {
                (void)dom.decide_zero(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
            }
            continue; // column vanishes on this branch
        }
        std::swap(mat[static_cast<std::size_t>(piv)], mat[static_cast<std::size_t>(r)]);
        auto& prow = mat[static_cast<std::size_t>(r)];
        UniPoly inv = dom.inv(prow[static_cast<std::size_t>(c)]);
        for (int j = c; j < cols; ++j) {
            prow[static_cast<std::size_t>(j)] = dom.mul(prow[static_cast<std::size_t>(j)], inv);
        }
        for (int i = r + 1; i < rows; ++i) {
            auto& row = mat[static_cast<std::size_t>(i)];
            if (dom.is_syntactic_zero(row[static_cast<std::size_t>(c)])) continue;
            UniPoly f = row[static_cast<std::size_t>(c)];
            for (int j = c; j < cols; ++j) {
                row[static_cast<std::size_t>(j)] =
                    dom.sub(row[static_cast<std::size_t>(j)], dom.mul(f, prow[static_cast<std::size_t>(j)]));
            }
        }
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Absolute factor counts.
// ---------------------------------------------------------------------------

int absolute_factor_count(const BiPoly& f) {
    if (f.syntactic_total_degree() < 1) {
        throw MathError(MathError::Kind::precondition,
                        "factor count requires a non-constant polynomial");
    }
    BiPoly rep = gcd_bi(gcd_bi(f, f.derivative(Var::X)), f.derivative(Var::Y));
    if (rep.syntactic_total_degree() >= 1) {
        throw MathError(MathError::Kind::precondition,
                        "factor count requires a square-free polynomial");
    }
    const int m = f.syntactic_degree(Var::X);
    const int n = f.syntactic_degree(Var::Y);
    if (n <= 0) return m;
    if (m <= 0) return n;
    auto mat = gao_matrix(f, m, n);
    return gao_col_count(m, n) - matrix_rank(mat, f.dom());
}

int absolute_factor_count_decided(const BiPolyExt& f) {
    if (f.decided_total_degree() < 1) {
        throw MathError(MathError::Kind::precondition,
                        "factor count requires a non-constant polynomial");
    }
    BiPolyExt rep = gcd_bi(gcd_bi(f, f.derivative(Var::X)), f.derivative(Var::Y));
    if (!rep.decided_constant()) {
        throw MathError(MathError::Kind::precondition,
                        "factor count requires a square-free polynomial");
    }
    const int m = f.decided_degree(Var::X);
    const int n = f.decided_degree(Var::Y);
    if (n <= 0) return m;
    if (m <= 0) return n;
    // Terms above the decided bidegree vanish on this branch; drop them so
    // the matrix caps are honest.
    BiPolyExt pruned = BiPolyExt::zero(f.dom());
    for (const auto& [mono, c] : f.terms()) {
        if (mono.x <= m && mono.y <= n) pruned.add_term(mono, c);
    }
    auto mat = gao_matrix(pruned, m, n);
    return gao_col_count(m, n) - matrix_rank(std::move(mat), f.dom());
}

std::variant<int, SplitEvent> absolute_factor_count(const BiPolyExt& f) {
    try {
        return absolute_factor_count_decided(f);
    } catch (const SplitSignal& s) {
        return s.event;
    }
}

// ---------------------------------------------------------------------------
// Pencil candidates.
// ---------------------------------------------------------------------------

namespace {

std::vector<i64> sample_points(int n) {
    std::vector<i64> xs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        xs[static_cast<std::size_t>(k)] = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    }
    return xs;
}

// Flat integer matrix (rows x cols) from a rational matrix whose entries are
// integers by construction.
std::vector<Int> to_int_flat(const std::vector<std::vector<Rational>>& m) {
    std::vector<Int> out;
    out.reserve(m.size() * (m.empty() ? 0 : m[0].size()));
    for (const auto& row : m) {
        for (const auto& c : row) {
            assert(c.get_den() == 1);
            out.push_back(c.get_num());
        }
    }
    return out;
}

struct MinorChoice {
    std::vector<int> rows;
    std::vector<int> cols;
};

// Sum over the two pencil matrices of entry magnitudes, row by row over the
// minor: a rigorous bound on the sum of |coefficients| of det(M0 - t*M1).
Int minor_coeff_bound(const std::vector<Int>& m0, const std::vector<Int>& m1,
                      int ncols, const MinorChoice& choice) {
    Int bound(1);
    for (int i : choice.rows) {
        Int row_sum(0);
        for (int j : choice.cols) {
            std::size_t idx = static_cast<std::size_t>(i) * ncols + j;
            row_sum += abs(m0[idx]) + abs(m1[idx]);
        }
        assert(row_sum > 0);
        bound *= row_sum;
    }
    return bound;
}

// Structural bound on deg_t det(M0 - t*M1) over the minor: rows whose M1
// part vanishes identically contribute no power of t.
int minor_t_degree_bound(const std::vector<Int>& m1, int ncols, const MinorChoice& choice) {
    int count = 0;
    for (int i : choice.rows) {
        for (int j : choice.cols) {
            if (m1[static_cast<std::size_t>(i) * ncols + j] != 0) {
                ++count;
                break;
            }
        }
    }
    return count;
}

// Exact determinant polynomial of the pencil minor via modular evaluation,
// interpolation, and CRT under the coefficient bound.
UniPoly minor_det_poly(const std::vector<Int>& m0, const std::vector<Int>& m1,
                       int ncols, const MinorChoice& choice) {
    const int n = static_cast<int>(choice.rows.size());
    const int degree_cap = std::min(n, minor_t_degree_bound(m1, ncols, choice));
    const int npts = degree_cap + 1;
    const std::vector<i64> xs = sample_points(npts);

    const Int bound = minor_coeff_bound(m0, m1, ncols, choice);
    PrimeStream primes;
    std::vector<u64> plist;
    Int modulus(1);
    while (modulus <= 2 * bound) {
        u64 p = primes.next();
        plist.push_back(p);
        modulus *= static_cast<unsigned long>(p);
    }

    std::vector<CrtValue> coeffs(static_cast<std::size_t>(npts));
    for (u64 p : plist) {
        // Reduce the minor entries once per prime.
        std::vector<u64> r0(static_cast<std::size_t>(n) * n);
        std::vector<u64> r1(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                std::size_t src = static_cast<std::size_t>(choice.rows[static_cast<std::size_t>(i)]) * ncols +
                                  choice.cols[static_cast<std::size_t>(j)];
                std::size_t dst = static_cast<std::size_t>(i) * n + j;
                r0[dst] = reduce_int(m0[src], p);
                r1[dst] = reduce_int(m1[src], p);
            }
        }
        std::vector<u64> vals(static_cast<std::size_t>(npts));
        for (int s = 0; s < npts; ++s) {
            u64 xm = norm_mod(xs[static_cast<std::size_t>(s)], p);
            PMatrix mm(n, n);
            for (std::size_t idx = 0; idx < r0.size(); ++idx) {
                mm.a[idx] = subm(r0[idx], mulm(xm, r1[idx], p), p);
            }
            vals[static_cast<std::size_t>(s)] = det_mod_p(std::move(mm), p);
        }
        std::vector<u64> cp = interp_mod_p(xs, std::move(vals), p);
        for (int k = 0; k < npts; ++k) {
            coeffs[static_cast<std::size_t>(k)].absorb(cp[static_cast<std::size_t>(k)], p);
        }
    }

    std::vector<Rational> out(static_cast<std::size_t>(npts));
    for (int k = 0; k < npts; ++k) {
        out[static_cast<std::size_t>(k)] = Rational(coeffs[static_cast<std::size_t>(k)].symmetric());
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return UniPoly(std::move(out));
}

// Dense integer coefficient vectors (in the surviving variable) of the
// coefficients of H with respect to the eliminated variable.
std::vector<std::vector<Int>> dense_coeff_vectors(const BiPoly& h, Var eliminated, int d) {
    const Var kept = other_var(eliminated);
    std::vector<std::vector<Int>> out(static_cast<std::size_t>(d) + 1);
    auto layers = coeffs_in(h, eliminated);
    for (std::size_t k = 0; k < layers.size() && k <= static_cast<std::size_t>(d); ++k) {
        const int dk = std::max(layers[k].syntactic_degree(kept), 0);
        std::vector<Int> vec(static_cast<std::size_t>(dk) + 1, Int(0));
        for (const auto& [mono, c] : layers[k].terms()) {
            assert(c.get_den() == 1);
            vec[static_cast<std::size_t>(mono.exp(kept))] = c.get_num();
        }
        out[k] = std::move(vec);
    }
    return out;
}

// Locus of parameters t at which the member F - t*G acquires a repeated
// factor of positive degree in `eliminated`: the monic gcd, over the powers
// of the surviving variable, of the coefficient polynomials of the fixed
// nominal-size Sylvester determinant of the member and its derivative.
// Returns the zero polynomial when the determinant family vanishes
// identically (every member degenerate).
UniPoly nonsquarefree_locus(const BiPoly& f, const BiPoly& g, int d, Var eliminated) {
    const int syl = 2 * d - 1;
    const int deg_t = syl;                // each row is linear in t
    const int deg_x = syl * d;            // entry degree in the kept variable
    const int npts_t = deg_t + 1;
    const int npts_x = deg_x + 1;
    const std::vector<i64> ts = sample_points(npts_t);
    const std::vector<i64> qs = sample_points(npts_x);

    auto fv = dense_coeff_vectors(f, eliminated, d);
    auto gv = dense_coeff_vectors(g, eliminated, d);

    // Cell layout: sylvester rows 0..d-2 hold the member coefficients, rows
    // d-1..2d-2 hold the derivative coefficients (scaled by the exponent).
    struct Cell {
        int row;
        int col;
        int layer; // index into fv/gv
        int scale; // 1 for member rows, exponent for derivative rows
    };
    std::vector<Cell> cells;
    for (int i = 0; i <= d - 2; ++i) {
        for (int l = 0; l <= d; ++l) cells.push_back({i, i + l, d - l, 1});
    }
    for (int i = 0; i <= d - 1; ++i) {
        for (int l = 0; l <= d - 1; ++l) {
            const int layer = d - l; // derivative coefficient b_{d-1-l} = layer * a_layer
            cells.push_back({d - 1 + i, i + l, layer, layer});
        }
    }

    // Rigorous bound on the sum of |coefficients| of the determinant as a
    // polynomial in (t, kept variable).
    std::vector<Int> row_weight(static_cast<std::size_t>(syl), Int(0));
    auto l1 = [](const std::vector<Int>& v) {
        Int s(0);
        for (const auto& c : v) s += abs(c);
        return s;
    };
    for (const auto& cell : cells) {
        row_weight[static_cast<std::size_t>(cell.row)] +=
            (l1(fv[static_cast<std::size_t>(cell.layer)]) + l1(gv[static_cast<std::size_t>(cell.layer)])) *
            cell.scale;
    }
    Int bound(1);
    for (const auto& w : row_weight) bound *= (w > 0 ? w : Int(1));

    PrimeStream primes;
    std::vector<u64> plist;
    Int modulus(1);
    while (modulus <= 2 * bound) {
        u64 p = primes.next();
        plist.push_back(p);
        modulus *= static_cast<unsigned long>(p);
    }

    // coeff_acc[e][j]: coefficient of kept^e * t^j.
    std::vector<std::vector<CrtValue>> coeff_acc(
        static_cast<std::size_t>(npts_x),
        std::vector<CrtValue>(static_cast<std::size_t>(npts_t)));

    for (u64 p : plist) {
        std::vector<std::vector<u64>> fvp(fv.size()), gvp(gv.size());
        for (std::size_t k = 0; k < fv.size(); ++k) {
            fvp[k].resize(fv[k].size());
            for (std::size_t i = 0; i < fv[k].size(); ++i) fvp[k][i] = reduce_int(fv[k][i], p);
            gvp[k].resize(gv[k].size());
            for (std::size_t i = 0; i < gv[k].size(); ++i) gvp[k][i] = reduce_int(gv[k][i], p);
        }
        auto horner = [&](const std::vector<u64>& v, u64 x) -> u64 {
            u64 acc = 0;
            for (std::size_t i = v.size(); i-- > 0;) acc = addm(mulm(acc, x, p), v[i], p);
            return acc;
        };
        // vals_t[s] = dense kept-variable values for sample ts[s].
        std::vector<std::vector<u64>> det_vals(
            static_cast<std::size_t>(npts_t),
            std::vector<u64>(static_cast<std::size_t>(npts_x)));
        for (int q = 0; q < npts_x; ++q) {
            const u64 xq = norm_mod(qs[static_cast<std::size_t>(q)], p);
            std::vector<u64> fe(fv.size()), ge(gv.size());
            for (std::size_t k = 0; k < fv.size(); ++k) {
                fe[k] = horner(fvp[k], xq);
                ge[k] = horner(gvp[k], xq);
            }
            PMatrix sf(syl, syl), sg(syl, syl);
            for (const auto& cell : cells) {
                const u64 sc = static_cast<u64>(cell.scale) % p;
                sf.at(cell.row, cell.col) =
                    addm(sf.at(cell.row, cell.col), mulm(sc, fe[static_cast<std::size_t>(cell.layer)], p), p);
                sg.at(cell.row, cell.col) =
                    addm(sg.at(cell.row, cell.col), mulm(sc, ge[static_cast<std::size_t>(cell.layer)], p), p);
            }
            for (int s = 0; s < npts_t; ++s) {
                const u64 tm = norm_mod(ts[static_cast<std::size_t>(s)], p);
                PMatrix mm(syl, syl);
                for (std::size_t idx = 0; idx < mm.a.size(); ++idx) {
                    mm.a[idx] = subm(sf.a[idx], mulm(tm, sg.a[idx], p), p);
                }
                det_vals[static_cast<std::size_t>(s)][static_cast<std::size_t>(q)] =
                    det_mod_p(std::move(mm), p);
            }
        }
        // Interpolate in the kept variable, then in t, and accumulate.
        std::vector<std::vector<u64>> kept_coeffs(static_cast<std::size_t>(npts_t));
        for (int s = 0; s < npts_t; ++s) {
            kept_coeffs[static_cast<std::size_t>(s)] =
                interp_mod_p(qs, std::move(det_vals[static_cast<std::size_t>(s)]), p);
        }
        for (int e = 0; e < npts_x; ++e) {
            std::vector<u64> tv(static_cast<std::size_t>(npts_t));
            for (int s = 0; s < npts_t; ++s) {
                tv[static_cast<std::size_t>(s)] = kept_coeffs[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)];
            }
            std::vector<u64> tc = interp_mod_p(ts, std::move(tv), p);
            for (int j = 0; j < npts_t; ++j) {
                coeff_acc[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)].absorb(
                    tc[static_cast<std::size_t>(j)], p);
            }
        }
    }

    UniPoly locus = UniPoly::zero();
    bool any_nonzero = false;
    for (int e = 0; e < npts_x; ++e) {
        std::vector<Rational> cs(static_cast<std::size_t>(npts_t));
        for (int j = 0; j < npts_t; ++j) {
            cs[static_cast<std::size_t>(j)] =
                Rational(coeff_acc[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)].symmetric());
        }
        while (!cs.empty() && cs.back() == 0) cs.pop_back();
        if (cs.empty()) continue;
        UniPoly part(std::move(cs));
        any_nonzero = true;
        locus = locus.is_zero() ? std::move(part) : modular_gcd_z(locus, part);
        if (locus.degree() == 0) return UniPoly::one();
    }
    if (!any_nonzero) return UniPoly::zero();
    return locus.monic();
}

} // namespace

CandidateSet pencil_candidates(const BiPoly& f, const BiPoly& g, int d, Rng& rng) {
    if (d < 2) {
        throw MathError(MathError::Kind::precondition,
                        "candidate search requires pencil degree at least 2");
    }
    if (f.syntactic_total_degree() != d || g.syntactic_total_degree() != d) {
        throw MathError(MathError::Kind::precondition,
                        "both pencil generators must have total degree d");
    }
    const auto tf = top_form(f, d);
    const auto tg = top_form(g, d);
    bool proportional = true;
    for (std::size_t i = 0; i < tf.size() && proportional; ++i) {
        for (std::size_t j = i + 1; j < tf.size(); ++j) {
            if (tf[i] * tg[j] != tf[j] * tg[i]) {
                proportional = false;
                break;
            }
        }
    }
    if (proportional) {
        throw MathError(MathError::Kind::precondition,
                        "pencil generators must have non-proportional top forms");
    }
    if ((tf.front() == 0 && tg.front() == 0) || (tf.back() == 0 && tg.back() == 0)) {
        throw MathError(MathError::Kind::precondition,
                        "pencil must reach degree d in each variable separately");
    }

    // Joint integer scaling; the pencil parameter must not be rescaled, so
    // both generators get the same multiplier.
    Int den(1);
    for (const auto* poly : {&f, &g}) {
        for (const auto& [mono, c] : poly->terms()) {
            (void)mono;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        }
    }
    Int content(0);
    for (const auto* poly : {&f, &g}) {
        for (const auto& [mono, c] : poly->terms()) {
            (void)mono;
            Int v = c.get_num() * (den / c.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        }
    }
    const Rational scale = Rational(den) / Rational(content);
    const BiPoly fz = f.scaled(scale);
    const BiPoly gz = g.scaled(scale);

    const int rows = gao_row_count(d, d);
    const int cols = gao_col_count(d, d);
    const std::vector<Int> m0 = to_int_flat(gao_matrix(fz, d, d));
    const std::vector<Int> m1 = to_int_flat(gao_matrix(gz, d, d));

    // Find a parameter value and prime at which the pencil matrix reaches
    // rank cols-1; the recorded pivots certify a non-vanishing maximal minor.
    PrimeStream discovery_primes;
    MinorChoice minor1;
    bool found = false;
    for (int attempt = 0; attempt < 6 && !found; ++attempt) {
        const i64 t0 = rng_range(rng, -1000000, 1000000);
        const u64 p = discovery_primes.next();
        PMatrix mp(rows, cols);
        const u64 tm = norm_mod(t0, p);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                std::size_t idx = static_cast<std::size_t>(i) * cols + j;
                mp.at(i, j) = subm(reduce_int(m0[idx], p), mulm(tm, reduce_int(m1[idx], p), p), p);
            }
        }
        std::vector<int> prows, pcols;
        const int rank = rank_pivots_mod_p(mp, p, &prows, &pcols);
        if (rank == cols - 1) {
            minor1.rows = std::move(prows);
            minor1.cols = std::move(pcols);
            found = true;
        } else if (rank > cols - 1) {
            // The system always has the radial solution in its kernel;
            // rank cols is impossible.
            assert(false);
        }
        if (found) {
            // Second independent minor: revisit the same matrix with the
            // rows and columns shuffled, so the elimination walks a
            // different pivot set.
            std::vector<int> rperm(static_cast<std::size_t>(rows));
            std::vector<int> cperm(static_cast<std::size_t>(cols));
            std::iota(rperm.begin(), rperm.end(), 0);
            std::iota(cperm.begin(), cperm.end(), 0);
            for (int i = rows - 1; i > 0; --i) {
                std::swap(rperm[static_cast<std::size_t>(i)],
                          rperm[static_cast<std::size_t>(rng_range(rng, 0, i))]);
            }
            for (int i = cols - 1; i > 0; --i) {
                std::swap(cperm[static_cast<std::size_t>(i)],
                          cperm[static_cast<std::size_t>(rng_range(rng, 0, i))]);
            }
            PMatrix mp2(rows, cols);
            for (int i = 0; i < rows; ++i) {
                for (int j = 0; j < cols; ++j) {
                    std::size_t idx = static_cast<std::size_t>(rperm[static_cast<std::size_t>(i)]) * cols +
                                      cperm[static_cast<std::size_t>(j)];
                    mp2.at(i, j) = subm(reduce_int(m0[idx], p), mulm(tm, reduce_int(m1[idx], p), p), p);
                }
            }
            std::vector<int> prows2, pcols2;
            const int rank2 = rank_pivots_mod_p(mp2, p, &prows2, &pcols2);
            MinorChoice minor2;
            if (rank2 == cols - 1) {
                for (int id : prows2) minor2.rows.push_back(rperm[static_cast<std::size_t>(id)]);
                for (int id : pcols2) minor2.cols.push_back(cperm[static_cast<std::size_t>(id)]);
            } else {
                minor2 = minor1;
            }

            UniPoly det1 = minor_det_poly(m0, m1, cols, minor1);
            UniPoly det2 = minor_det_poly(m0, m1, cols, minor2);
            assert(!det1.is_zero() && !det2.is_zero());
            UniPoly core = modular_gcd_z(det1, det2);

            UniPoly wy = nonsquarefree_locus(fz, gz, d, Var::Y);
            UniPoly wx = nonsquarefree_locus(fz, gz, d, Var::X);
            if (wy.is_zero() || wx.is_zero()) {
                throw MathError(MathError::Kind::decomposable,
                                "every member of the pencil is degenerate; the fraction decomposes");
            }
            UniPoly cand = squarefree_part_z(core * wy * wx);
            return CandidateSet{cand.monic(), true};
        }
    }
    throw MathError(MathError::Kind::decomposable,
                    "every member of the pencil appears reducible; the fraction decomposes");
}

} // namespace remspec
