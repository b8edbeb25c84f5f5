#include "remspec/parse.hpp"

#include <cctype>
#include <sstream>

#include "remspec/errors.hpp"

namespace remspec {

namespace {

constexpr int kMaxExponent = 512;

// Recursive-descent parser over a generic "monomial builder": the same
// grammar serves the bivariate (X, Y) and univariate (t) front ends.
class Parser {
public:
    Parser(const std::string& text, bool univariate)
        : text_(text), univariate_(univariate) {}

    BiPoly run() {
        BiPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream msg;
        msg << what << " at offset " << pos_;
        throw ParseError(pos_, msg.str());
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly parse_expr() {
        BiPoly acc = parse_term();
        while (true) {
            if (consume('+')) {
                acc = acc + parse_term();
            } else if (consume('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    BiPoly parse_term() {
        BiPoly acc = parse_factor();
        while (consume('*')) {
            acc = acc * parse_factor();
        }
        return acc;
    }

    BiPoly parse_factor() {
        if (consume('-')) {
            return -parse_factor();
        }
        BiPoly base = parse_atom();
        if (consume('^')) {
            long e = parse_uint();
            if (e > kMaxExponent) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    BiPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        RationalDomain dom;
        if (!univariate_ && c == 'X') {
            ++pos_;
            return BiPoly::variable(dom, Var::X);
        }
        if (!univariate_ && c == 'Y') {
            ++pos_;
            return BiPoly::variable(dom, Var::Y);
        }
        if (univariate_ && c == 't') {
            ++pos_;
            return BiPoly::variable(dom, Var::X);
        }
        if (c == '(') {
            ++pos_;
            BiPoly inner = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_integer();
            if (consume('/')) {
                Int den = parse_integer();
                if (den == 0) fail("zero denominator");
                Rational r(num, den);
                r.canonicalize();
                return BiPoly::constant(dom, r);
            }
            return BiPoly::constant(dom, Rational(num));
        }
        fail(univariate_ ? "expected a number, 't', '(' or '-'"
                         : "expected a number, 'X', 'Y', '(' or '-'");
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) fail("expected an integer");
        return Int(text_.substr(start, pos_ - start));
    }

    long parse_uint() {
        skip_ws();
        Int v = parse_integer();
        if (!v.fits_slong_p()) fail("exponent too large");
        return v.get_si();
    }

    const std::string& text_;
    bool univariate_;
    std::size_t pos_ = 0;
};

std::string render_term(const Mono& m, const Rational& c, bool leading) {
    std::ostringstream out;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (leading) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = m.x > 0 || m.y > 0;
    bool print_coeff = !has_vars || mag != 1;
    if (print_coeff) out << mag.get_str();
    if (m.x > 0) {
        if (print_coeff) out << "*";
        out << "X";
        if (m.x > 1) out << "^" << m.x;
    }
    if (m.y > 0) {
        if (print_coeff || m.x > 0) out << "*";
        out << "Y";
        if (m.y > 1) out << "^" << m.y;
    }
    return out.str();
}

} // namespace

BiPoly parse_bipoly(const std::string& text) { return Parser(text, false).run(); }

UniPoly parse_unipoly(const std::string& text) {
    BiPoly p = Parser(text, true).run();
    std::vector<Rational> coeffs(static_cast<std::size_t>(
                                     std::max(p.syntactic_degree(Var::X), 0)) + 1,
                                 Rational(0));
    for (const auto& [m, c] : p.terms()) {
        coeffs[static_cast<std::size_t>(m.x)] = c;
    }
    return UniPoly(std::move(coeffs));
}

std::string to_string(const BiPoly& p) {
    if (p.syntactically_zero()) return "0";
    std::ostringstream out;
    bool leading = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        out << render_term(it->first, it->second, leading);
        leading = false;
    }
    return out.str();
}

} // namespace remspec
