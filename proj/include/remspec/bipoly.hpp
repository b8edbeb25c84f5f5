#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "remspec/domain.hpp"
#include "remspec/errors.hpp"

namespace remspec {

enum class Var { X, Y };

inline Var other_var(Var v) { return v == Var::X ? Var::Y : Var::X; }

struct Mono {
    int x = 0;
    int y = 0;

    int total() const { return x + y; }
    int exp(Var v) const { return v == Var::X ? x : y; }
    bool divisible_by(const Mono& m) const { return x >= m.x && y >= m.y; }
    Mono quotient(const Mono& m) const { return Mono{x - m.x, y - m.y}; }
    Mono product(const Mono& m) const { return Mono{x + m.x, y + m.y}; }
    bool operator==(const Mono& m) const { return x == m.x && y == m.y; }
};

// Graded ordering with ties broken by the X-exponent: a term map's last
// entry is the leading term (highest total degree, then highest X power).
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.x < b.x;
    }
};

// Sparse bivariate polynomial over a coefficient domain. Coefficients are
// kept reduced and syntactic zeros are never stored; over an extension
// scope a stored coefficient may still vanish on some branches of the
// modulus, which the decision procedures below resolve (splitting the scope
// when branches disagree).
template <class Dom>
class BiPolyT {
public:
    using Elem = typename Dom::Elem;
    using TermMap = std::map<Mono, Elem, MonoLess>;

    BiPolyT() = default;
    explicit BiPolyT(Dom dom) : dom_(std::move(dom)) {}

    static BiPolyT zero(Dom dom) { return BiPolyT(std::move(dom)); }
    static BiPolyT constant(Dom dom, const Elem& c) {
        BiPolyT p(std::move(dom));
        p.add_term(Mono{0, 0}, c);
        return p;
    }
    static BiPolyT term(Dom dom, const Elem& c, int ex, int ey) {
        BiPolyT p(std::move(dom));
        p.add_term(Mono{ex, ey}, c);
        return p;
    }
    static BiPolyT variable(Dom dom, Var v) {
        return term(dom, dom.one(), v == Var::X ? 1 : 0, v == Var::X ? 0 : 1);
    }

    const Dom& dom() const { return dom_; }
    const TermMap& terms() const { return terms_; }
    bool syntactically_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Largest stored exponents; upper bounds for the decided degrees.
    int syntactic_total_degree() const {
        return terms_.empty() ? -1 : terms_.rbegin()->first.total();
    }
    int syntactic_degree(Var v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
        return d;
    }
    bool free_of(Var v) const { return syntactic_degree(v) <= 0; }

    const Elem& coeff(int ex, int ey) const {
        auto it = terms_.find(Mono{ex, ey});
        return it != terms_.end() ? it->second : zero_elem();
    }

    void add_term(const Mono& m, const Elem& c) {
        if (dom_.is_syntactic_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = dom_.add(it->second, c);
            if (dom_.is_syntactic_zero(it->second)) terms_.erase(it);
        }
    }

    BiPolyT operator+(const BiPolyT& other) const {
        assert(dom_.compatible(other.dom_));
        BiPolyT out = *this;
        for (const auto& [m, c] : other.terms_) out.add_term(m, c);
        return out;
    }
    BiPolyT operator-(const BiPolyT& other) const {
        assert(dom_.compatible(other.dom_));
        BiPolyT out = *this;
        for (const auto& [m, c] : other.terms_) out.add_term(m, dom_.neg(c));
        return out;
    }
    BiPolyT operator*(const BiPolyT& other) const {
        assert(dom_.compatible(other.dom_));
        BiPolyT out(dom_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : other.terms_) {
                out.add_term(ma.product(mb), dom_.mul(ca, cb));
            }
        }
        return out;
    }
    BiPolyT operator-() const {
        BiPolyT out(dom_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, dom_.neg(c));
        return out;
    }
    // Syntactic identity of the stored representatives.
    bool operator==(const BiPolyT& other) const {
        if (terms_.size() != other.terms_.size()) return false;
        auto it = other.terms_.begin();
        for (const auto& [m, c] : terms_) {
            if (!(m == it->first) || !dom_.equal_syntactic(c, it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const BiPolyT& other) const { return !(*this == other); }

    BiPolyT scaled(const Elem& e) const {
        BiPolyT out(dom_);
        for (const auto& [m, c] : terms_) out.add_term(m, dom_.mul(c, e));
        return out;
    }
    BiPolyT mono_shifted(const Mono& shift) const {
        BiPolyT out(dom_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m.product(shift), c);
        return out;
    }
    BiPolyT pow(unsigned e) const {
        BiPolyT result = constant(dom_, dom_.one());
        BiPolyT base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1u;
        }
        return result;
    }

    BiPolyT derivative(Var v) const {
        BiPolyT out(dom_);
        for (const auto& [m, c] : terms_) {
            int e = m.exp(v);
            if (e == 0) continue;
            Mono dm = v == Var::X ? Mono{m.x - 1, m.y} : Mono{m.x, m.y - 1};
            out.add_term(dm, dom_.mul(c, dom_.from_rational(Rational(e))));
        }
        return out;
    }

    Elem eval(const Elem& x0, const Elem& y0) const {
        Elem acc = dom_.zero();
        for (const auto& [m, c] : terms_) {
            Elem v = c;
            for (int i = 0; i < m.x; ++i) v = dom_.mul(v, x0);
            for (int i = 0; i < m.y; ++i) v = dom_.mul(v, y0);
            acc = dom_.add(acc, v);
        }
        return acc;
    }

    // ---- decision procedures (may throw SplitSignal over an extension) ----

    // Is the polynomial non-zero on the current branch?
    bool decide_nonzero() const {
        if (terms_.empty()) return false;
        for (const auto& [m, c] : terms_) {
            if (dom_.invertible_query(c)) return true;
        }
        // Every stored coefficient vanishes on some branch: refine the scope
        // (decide_zero on a zero divisor splits).
        return !dom_.decide_zero(terms_.begin()->second);
    }

    // Total degree on the current branch; -1 for the zero polynomial.
    int decided_total_degree() const {
        auto it = terms_.rbegin();
        while (it != terms_.rend()) {
            int d = it->first.total();
            for (auto jt = it; jt != terms_.rend() && jt->first.total() == d; ++jt) {
                if (dom_.invertible_query(jt->second)) return d;
            }
            if (!dom_.decide_zero(it->second)) return d; // splits first
            while (it != terms_.rend() && it->first.total() == d) ++it;
        }
        return -1;
    }

    int decided_degree(Var v) const {
        for (int d = syntactic_degree(v); d >= 0; --d) {
            const Elem* witness = nullptr;
            for (const auto& [m, c] : terms_) {
                if (m.exp(v) != d) continue;
                if (dom_.invertible_query(c)) return d;
                witness = &c;
            }
            if (witness != nullptr && !dom_.decide_zero(*witness)) return d; // splits first
        }
        return -1;
    }

    // Leading term under the graded ordering on the current branch.
    std::optional<std::pair<Mono, Elem>> decided_leading_term() const {
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (dom_.invertible_query(it->second)) {
                return std::make_pair(it->first, it->second);
            }
            (void)dom_.decide_zero(it->second); // splits unless uniformly zero
        }
        return std::nullopt;
    }

    bool decided_constant() const { return decided_total_degree() <= 0; }

    // Sum of the constant-term coefficients; only meaningful for polynomials
    // with no stored X/Y exponents.
    Elem constant_elem() const {
        Elem acc = dom_.zero();
        for (const auto& [m, c] : terms_) {
            assert(m.x == 0 && m.y == 0);
            acc = dom_.add(acc, c);
        }
        return acc;
    }

private:
    static const Elem& zero_elem() {
        static const Elem z{};
        return z;
    }

    TermMap terms_;
    Dom dom_;
};

using BiPoly = BiPolyT<RationalDomain>;
using BiPolyExt = BiPolyT<ExtDomain>;

// ---------------------------------------------------------------------------
// Free algorithms over any coefficient domain.
// ---------------------------------------------------------------------------

// Coefficients of the powers of v, each free of v. Index == power of v.
template <class Dom>
std::vector<BiPolyT<Dom>> coeffs_in(const BiPolyT<Dom>& p, Var v) {
    int n = std::max(p.syntactic_degree(v), 0);
    std::vector<BiPolyT<Dom>> out(static_cast<std::size_t>(n) + 1,
                                  BiPolyT<Dom>::zero(p.dom()));
    for (const auto& [m, c] : p.terms()) {
        Mono residual = (v == Var::X) ? Mono{0, m.y} : Mono{m.x, 0};
        out[static_cast<std::size_t>(m.exp(v))].add_term(residual, c);
    }
    return out;
}

template <class Dom>
BiPolyT<Dom> assemble_in(Var v, const std::vector<BiPolyT<Dom>>& cs, const Dom& dom) {
    BiPolyT<Dom> out = BiPolyT<Dom>::zero(dom);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Mono shift = (v == Var::X) ? Mono{static_cast<int>(i), 0}
                                   : Mono{0, static_cast<int>(i)};
        out = out + cs[i].mono_shifted(shift);
    }
    return out;
}

// Exact division; std::nullopt when the divisor does not divide.
template <class Dom>
std::optional<BiPolyT<Dom>> try_divide(const BiPolyT<Dom>& f, const BiPolyT<Dom>& g) {
    const Dom& dom = f.dom();
    auto lg = g.decided_leading_term();
    if (!lg) {
        throw MathError(MathError::Kind::precondition, "division by the zero polynomial");
    }
    typename Dom::Elem lg_inv = dom.inv(lg->second);
    BiPolyT<Dom> r = f;
    BiPolyT<Dom> q = BiPolyT<Dom>::zero(dom);
    while (true) {
        auto lr = r.decided_leading_term();
        if (!lr) return q;
        if (!lr->first.divisible_by(lg->first)) return std::nullopt;
        Mono shift = lr->first.quotient(lg->first);
        typename Dom::Elem c = dom.mul(lr->second, lg_inv);
        q.add_term(shift, c);
        r = r - g.scaled(c).mono_shifted(shift);
    }
}

template <class Dom>
BiPolyT<Dom> exact_divide(const BiPolyT<Dom>& f, const BiPolyT<Dom>& g) {
    auto q = try_divide(f, g);
    if (!q) {
        throw MathError(MathError::Kind::precondition, "division is not exact");
    }
    return *q;
}

namespace detail {

// Dense coefficient vector of a polynomial that is genuinely univariate in
// v (free of the complementary variable).
template <class Dom>
std::vector<typename Dom::Elem> dense_univariate(const BiPolyT<Dom>& p, Var v) {
    int n = std::max(p.syntactic_degree(v), 0);
    std::vector<typename Dom::Elem> out(static_cast<std::size_t>(n) + 1, p.dom().zero());
    for (const auto& [m, c] : p.terms()) {
        assert(m.exp(other_var(v)) == 0);
        out[static_cast<std::size_t>(m.exp(v))] = c;
    }
    return out;
}

// Trims to the decided degree (splits over an extension when needed).
template <class Dom>
int decided_vec_degree(std::vector<typename Dom::Elem>& a, const Dom& dom) {
    while (!a.empty()) {
        const auto& top = a.back();
        if (dom.is_syntactic_zero(top) || dom.decide_zero(top)) {
            a.pop_back();
            continue;
        }
        return static_cast<int>(a.size()) - 1;
    }
    return -1;
}

template <class Dom>
std::vector<typename Dom::Elem> vec_monic(std::vector<typename Dom::Elem> a,
                                          const Dom& dom) {
    if (a.empty()) return a;
    auto inv = dom.inv(a.back());
    for (auto& c : a) c = dom.mul(c, inv);
    return a;
}

// Euclidean remainder; `b` trimmed with an invertible top. The result is
// trimmed to its decided degree.
template <class Dom>
std::vector<typename Dom::Elem> vec_rem(std::vector<typename Dom::Elem> a,
                                        const std::vector<typename Dom::Elem>& b,
                                        const Dom& dom) {
    auto b_inv = dom.inv(b.back());
    while (a.size() >= b.size()) {
        if (dom.is_syntactic_zero(a.back()) || dom.decide_zero(a.back())) {
            a.pop_back();
            continue;
        }
        auto factor = dom.mul(a.back(), b_inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            a[i + shift] = dom.sub(a[i + shift], dom.mul(factor, b[i]));
        }
        a.pop_back();
    }
    (void)decided_vec_degree(a, dom);
    return a;
}

// Monic gcd of genuinely univariate polynomials given as element vectors.
template <class Dom>
std::vector<typename Dom::Elem> vec_gcd(std::vector<typename Dom::Elem> a,
                                        std::vector<typename Dom::Elem> b,
                                        const Dom& dom) {
    (void)decided_vec_degree(a, dom);
    (void)decided_vec_degree(b, dom);
    while (!b.empty()) {
        std::vector<typename Dom::Elem> r = vec_rem(std::move(a), b, dom);
        a = std::move(b);
        b = std::move(r);
    }
    return vec_monic(std::move(a), dom);
}

template <class Dom>
BiPolyT<Dom> from_dense(const std::vector<typename Dom::Elem>& v, Var var,
                        const Dom& dom) {
    BiPolyT<Dom> out = BiPolyT<Dom>::zero(dom);
    for (std::size_t i = 0; i < v.size(); ++i) {
        int e = static_cast<int>(i);
        out.add_term(var == Var::X ? Mono{e, 0} : Mono{0, e}, v[i]);
    }
    return out;
}

} // namespace detail

// Canonical scaling. Over the rationals: coprime integer coefficients with
// a positive leading (graded-order) coefficient. Over an extension scope:
// leading coefficient 1.
BiPoly normalized(const BiPoly& p);

template <class Dom>
BiPolyT<Dom> normalized(const BiPolyT<Dom>& p) {
    auto lt = p.decided_leading_term();
    if (!lt) return p;
    return p.scaled(p.dom().inv(lt->second));
}

// gcd of the coefficients of the powers of v (the content of p viewed as a
// univariate polynomial in v). The result is free of v; zero iff p is zero.
template <class Dom>
BiPolyT<Dom> content_in(const BiPolyT<Dom>& p, Var v) {
    Var u = other_var(v);
    const Dom& dom = p.dom();
    std::vector<typename Dom::Elem> acc;
    bool have = false;
    for (auto& c : coeffs_in(p, v)) {
        if (c.syntactically_zero()) continue;
        auto vec = detail::dense_univariate(c, u);
        if (!have) {
            (void)detail::decided_vec_degree(vec, dom);
            acc = detail::vec_monic(std::move(vec), dom);
            have = !acc.empty();
        } else {
            acc = detail::vec_gcd(std::move(acc), std::move(vec), dom);
        }
        if (have && acc.size() == 1) break; // unit content
    }
    if (!have || acc.empty()) return BiPolyT<Dom>::zero(dom);
    return detail::from_dense(acc, u, dom);
}

template <class Dom>
BiPolyT<Dom> primitive_part_in(const BiPolyT<Dom>& p, Var v) {
    BiPolyT<Dom> c = content_in(p, v);
    if (c.syntactically_zero()) return p; // p vanishes on this branch
    return exact_divide(p, c);
}

namespace detail {

// One pseudo-reduction pass used by the primitive remainder sequence:
// returns a multiple (by a power of lc_v(b)) of the remainder of a by b in
// the variable v. Requires deg_v(b) >= 1 on the current branch.
template <class Dom>
BiPolyT<Dom> pseudo_rem(const BiPolyT<Dom>& a, const BiPolyT<Dom>& b, Var v) {
    auto bc = coeffs_in(b, v);
    int db = static_cast<int>(bc.size()) - 1;
    while (db >= 0 && !bc[static_cast<std::size_t>(db)].decide_nonzero()) --db;
    assert(db >= 1);
    BiPolyT<Dom> lb = bc[static_cast<std::size_t>(db)];

    BiPolyT<Dom> r = a;
    while (true) {
        auto rc = coeffs_in(r, v);
        int dr = static_cast<int>(rc.size()) - 1;
        while (dr >= 0 && !rc[static_cast<std::size_t>(dr)].decide_nonzero()) --dr;
        if (dr < db) return r;
        Mono shift = (v == Var::X) ? Mono{dr - db, 0} : Mono{0, dr - db};
        BiPolyT<Dom> top = rc[static_cast<std::size_t>(dr)];
        r = r * lb - (b * top).mono_shifted(shift);
    }
}

} // namespace detail

// Greatest common divisor, canonically scaled (see normalized()).
template <class Dom>
BiPolyT<Dom> gcd_bi(const BiPolyT<Dom>& f, const BiPolyT<Dom>& g) {
    const Dom& dom = f.dom();
    if (!f.decide_nonzero()) return g.decide_nonzero() ? normalized(g) : g;
    if (!g.decide_nonzero()) return normalized(f);

    const bool f_flat = f.free_of(Var::Y);
    const bool g_flat = g.free_of(Var::Y);
    if (f_flat && g_flat) {
        if (f.free_of(Var::X) && g.free_of(Var::X)) {
            return BiPolyT<Dom>::constant(dom, dom.one());
        }
        Var vf = f.free_of(Var::X) ? Var::Y : Var::X;
        Var vg = g.free_of(Var::X) ? Var::Y : Var::X;
        if (vf != vg) {
            // One of them is constant (non-zero): the gcd is a unit.
            return BiPolyT<Dom>::constant(dom, dom.one());
        }
        auto gcd_vec = detail::vec_gcd(detail::dense_univariate(f, vf),
                                       detail::dense_univariate(g, vf), dom);
        return normalized(detail::from_dense(gcd_vec, vf, dom));
    }
    if (f_flat != g_flat) {
        // Exactly one side is free of Y; the gcd divides the other side's
        // content with respect to Y.
        const BiPolyT<Dom>& flat = f_flat ? f : g;
        const BiPolyT<Dom>& mixed = f_flat ? g : f;
        BiPolyT<Dom> cont = content_in(mixed, Var::Y);
        if (cont.syntactically_zero()) return normalized(flat);
        return gcd_bi(flat, cont);
    }

    // Both involve Y: primitive polynomial-remainder sequence in Y.
    BiPolyT<Dom> cf = content_in(f, Var::Y);
    BiPolyT<Dom> cg = content_in(g, Var::Y);
    BiPolyT<Dom> pf = exact_divide(f, cf);
    BiPolyT<Dom> pg = exact_divide(g, cg);
    BiPolyT<Dom> c = gcd_bi(cf, cg);

    int df = pf.decided_degree(Var::Y);
    int dg = pg.decided_degree(Var::Y);
    BiPolyT<Dom> r0 = df >= dg ? pf : pg;
    BiPolyT<Dom> r1 = df >= dg ? pg : pf;
    while (true) {
        int d1 = r1.decided_degree(Var::Y);
        if (d1 < 0) {
            return normalized(c * primitive_part_in(r0, Var::Y));
        }
        if (d1 == 0) {
            // Non-zero remainder free of Y: primitive parts are coprime.
            return normalized(c);
        }
        BiPolyT<Dom> rem = detail::pseudo_rem(r0, r1, Var::Y);
        if (!rem.decide_nonzero()) {
            return normalized(c * primitive_part_in(r1, Var::Y));
        }
        r0 = std::move(r1);
        r1 = primitive_part_in(rem, Var::Y);
    }
}

// One square-free layer: `factor` appears with multiplicity `exponent`.
template <class Dom>
struct SquarefreeLayer {
    BiPolyT<Dom> factor;
    int exponent;
};

namespace detail {

// Yun's algorithm in the direction of v; valid when every irreducible
// factor of p has positive v-degree.
template <class Dom>
std::vector<SquarefreeLayer<Dom>> yun(const BiPolyT<Dom>& p, Var v) {
    std::vector<SquarefreeLayer<Dom>> layers;
    BiPolyT<Dom> dp = p.derivative(v);
    BiPolyT<Dom> g = gcd_bi(p, dp);
    BiPolyT<Dom> c = exact_divide(p, g);
    BiPolyT<Dom> w = exact_divide(dp, g);
    int i = 1;
    while (!c.decided_constant()) {
        BiPolyT<Dom> y = w - c.derivative(v);
        BiPolyT<Dom> a = gcd_bi(c, y);
        if (!a.decided_constant()) layers.push_back({a, i});
        c = exact_divide(c, a);
        w = exact_divide(y, a);
        ++i;
    }
    return layers;
}

} // namespace detail

// Multiplicity-grouped square-free decomposition: p is a unit times the
// product of factor^exponent over the layers, with layers pairwise coprime,
// square-free, sorted by exponent and canonically scaled. Requires p
// non-constant on the current branch.
template <class Dom>
std::vector<SquarefreeLayer<Dom>> squarefree_decompose(const BiPolyT<Dom>& p) {
    if (p.decided_total_degree() < 1) {
        throw MathError(MathError::Kind::precondition,
                        "square-free decomposition requires a non-constant input");
    }
    std::vector<SquarefreeLayer<Dom>> layers;
    if (p.free_of(Var::Y)) {
        layers = detail::yun(p, Var::X);
    } else if (p.free_of(Var::X)) {
        layers = detail::yun(p, Var::Y);
    } else {
        BiPolyT<Dom> cont = content_in(p, Var::Y);
        BiPolyT<Dom> pp = exact_divide(p, cont);
        if (!pp.decided_constant()) layers = detail::yun(pp, Var::Y);
        if (!cont.decided_constant()) {
            for (auto& layer : squarefree_decompose(cont)) {
                bool merged = false;
                for (auto& existing : layers) {
                    if (existing.exponent == layer.exponent) {
                        existing.factor = existing.factor * layer.factor;
                        merged = true;
                        break;
                    }
                }
                if (!merged) layers.push_back(layer);
            }
        }
    }
    std::sort(layers.begin(), layers.end(),
              [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
    for (auto& layer : layers) layer.factor = normalized(layer.factor);
    return layers;
}

// Fraction-free determinant (Bareiss) of a square matrix of polynomials.
template <class Dom>
BiPolyT<Dom> bareiss_det(std::vector<std::vector<BiPolyT<Dom>>> m, const Dom& dom) {
    const std::size_t n = m.size();
    if (n == 0) return BiPolyT<Dom>::constant(dom, dom.one());
    BiPolyT<Dom> prev = BiPolyT<Dom>::constant(dom, dom.one());
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && !m[pivot][k].decide_nonzero()) ++pivot;
        if (pivot == n) return BiPolyT<Dom>::zero(dom);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BiPolyT<Dom> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, prev);
            }
            m[i][k] = BiPolyT<Dom>::zero(dom);
        }
        prev = m[k][k];
    }
    BiPolyT<Dom> det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

// Resultant with respect to Y (the result is free of Y). Conventions:
// Res(f, g) = f^deg_Y(g) when f is free of Y, and 1 when both are.
template <class Dom>
BiPolyT<Dom> resultant_y(const BiPolyT<Dom>& f, const BiPolyT<Dom>& g) {
    const Dom& dom = f.dom();
    if (!f.decide_nonzero() || !g.decide_nonzero()) {
        throw MathError(MathError::Kind::precondition,
                        "resultant requires non-zero inputs");
    }
    int m = f.decided_degree(Var::Y);
    int n = g.decided_degree(Var::Y);
    if (m <= 0 && n <= 0) return BiPolyT<Dom>::constant(dom, dom.one());
    if (m <= 0) return f.pow(static_cast<unsigned>(n));
    if (n <= 0) return g.pow(static_cast<unsigned>(m));
    auto fc = coeffs_in(f, Var::Y);
    auto gc = coeffs_in(g, Var::Y);
    fc.resize(static_cast<std::size_t>(m) + 1, BiPolyT<Dom>::zero(dom));
    gc.resize(static_cast<std::size_t>(n) + 1, BiPolyT<Dom>::zero(dom));
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<BiPolyT<Dom>>> syl(
        size, std::vector<BiPolyT<Dom>>(size, BiPolyT<Dom>::zero(dom)));
    for (int row = 0; row < n; ++row) {
        for (int j = 0; j <= m; ++j) {
            syl[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                fc[static_cast<std::size_t>(m - j)];
        }
    }
    for (int row = 0; row < m; ++row) {
        for (int j = 0; j <= n; ++j) {
            syl[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] =
                gc[static_cast<std::size_t>(n - j)];
        }
    }
    return bareiss_det(std::move(syl), dom);
}

// ---------------------------------------------------------------------------
// Rational-coefficient helpers (definitions in bipoly.cpp).
// ---------------------------------------------------------------------------

// Scale by a positive rational so all coefficients become coprime integers.
BiPoly integer_primitive(const BiPoly& p);

// Lift a rational polynomial into an extension scope.
BiPolyExt lift_to_scope(const BiPoly& p, const ExtDomain& dom);

// Coefficients of the total-degree-d part, indexed by X-exponent (length d+1).
std::vector<Rational> top_form(const BiPoly& p, int d);

// Apply the invertible projective change `m` to the degree-d homogenization
// of f and read the result back in the affine chart: substitute the linear
// forms given by the rows of m for the three homogeneous coordinates, with
// the third coordinate set to 1 afterwards. Requires det(m) != 0, deg f <= d.
BiPoly projective_change(const BiPoly& f, int d,
                         const std::array<std::array<Rational, 3>, 3>& m);

// A reduced fraction f/g of polynomials: gcd(f, g) = 1, g != 0, and the
// pair non-constant (max(deg f, deg g) >= 1).
struct RationalFunctionPair {
    BiPoly numerator;
    BiPoly denominator;
    int degree; // max of the two total degrees

    static RationalFunctionPair make(const BiPoly& f, const BiPoly& g);
};

} // namespace remspec
