#include "remspec/unipoly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "remspec/errors.hpp"

namespace remspec {

namespace {
const Rational kZero(0);
} // namespace

UniPoly::UniPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() {
    return UniPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

bool UniPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return UniPoly();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c == 0) return UniPoly();
    std::vector<Rational> out = coeffs_;
    for (auto& x : out) x *= c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted(int k) const {
    assert(k >= 0);
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> out(static_cast<std::size_t>(k), Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = UniPoly::one();
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return UniPoly(std::move(out));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
    if (divisor.is_zero()) {
        throw MathError(MathError::Kind::precondition, "division by the zero polynomial");
    }
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1,
                            Rational(0));
    const Rational& lc = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational factor = rem.leading() / lc;
        q[static_cast<std::size_t>(shift)] = factor;
        rem = rem - divisor.scaled(factor).shifted(shift);
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::monic() const {
    assert(!is_zero());
    if (leading() == 1) return *this;
    return scaled(Rational(1) / leading());
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        Rational mag = c;
        if (first) {
            if (c < 0) {
                out << "-";
                mag = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) mag = -c;
        }
        bool print_coeff = (i == 0) || mag != 1;
        if (print_coeff) out << mag.get_str();
        if (i > 0) {
            if (print_coeff) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

UniPoly squarefree_part_uni(const UniPoly& p) {
    if (p.is_zero()) {
        throw MathError(MathError::Kind::precondition,
                        "square-free part of the zero polynomial");
    }
    if (p.degree() == 0) return UniPoly::one();
    UniPoly g = uni_gcd(p, p.derivative());
    auto [q, r] = p.divrem(g);
    assert(r.is_zero());
    return q.monic();
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    assert(xs.size() == ys.size());
    assert(!xs.empty());
    const std::size_t n = xs.size();
    // Divided differences, then expansion of the Newton form.
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    }
    UniPoly result;
    UniPoly basis = UniPoly::one();
    for (std::size_t i = 0; i < n; ++i) {
        result = result + basis.scaled(dd[i]);
        basis = basis * (UniPoly::variable() - UniPoly(xs[i]));
    }
    return result;
}

} // namespace remspec
