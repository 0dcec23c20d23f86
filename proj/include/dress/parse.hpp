#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "dress/dress_elem.hpp"
#include "dress/errors.hpp"
#include "dress/interval.hpp"
#include "dress/mat2.hpp"
#include "dress/poly.hpp"

namespace dress {

// ---------------------------------------------------------------------------
// Printing. The canonical polynomial form is the term grammar
//   c | c*X^k | X^k | X     joined by '+' / '-',  e.g. "1/2*X^4 - 1/2*X^2 + 3"
// and round-trips through the parser below.
// ---------------------------------------------------------------------------

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c == 0) continue;
        const bool first = out.empty();
        const bool negative = sign(c) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational a = abs(c);
        if (k == 0) {
            out += a.get_str();
        } else {
            if (a != 1) {
                out += a.get_str();
                out += "*";
            }
            out += "X";
            if (k != 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

inline std::string to_string(const DressElem& e) {
    if (e.den() == Poly(1)) return to_string(e.num());
    return "(" + to_string(e.num()) + ")/(" + to_string(e.den()) + ")";
}

inline std::string to_string(const Mat2& m) {
    return "[[" + to_string(m.a) + ", " + to_string(m.b) + "], [" + to_string(m.c) + ", " +
           to_string(m.d) + "]]";
}

inline std::string to_string(const Interval& i) {
    if (i.whole) return "(-inf, +inf)";
    if (i.is_point()) return "[" + to_string(i.lo) + "]";
    return std::string(i.lo_closed ? "[" : "(") + to_string(i.lo) + ", " + to_string(i.hi) +
           (i.hi_closed ? "]" : ")");
}

// ---------------------------------------------------------------------------
// Parsing. A small recursive-descent parser over the expression grammar
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := ('+'|'-')* power
//   power := atom ('^' integer)?
//   atom  := integer | 'X' | '(' expr ')'
// evaluated exactly in Q(X); whitespace is insignificant. This accepts a
// superset of the canonical form (parenthesized rational functions like
// "(X^2-1)/(1+X^2)" in particular).
// ---------------------------------------------------------------------------

namespace detail {

struct RatFunc {
    Poly num, den;  // den nonzero

    static RatFunc of(Poly p) { return {std::move(p), Poly(1)}; }

    RatFunc reduced() const {
        RatFunc r = *this;
        Poly g = gcd(r.num, r.den);
        if (g.degree() > 0) {
            r.num = exact_div(r.num, g);
            r.den = exact_div(r.den, g);
        }
        return r;
    }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc{num * o.den + o.num * den, den * o.den}.reduced();
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc{num * o.den - o.num * den, den * o.den}.reduced();
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc{num * o.num, den * o.den}.reduced(); }

    RatFunc divided_by(const RatFunc& o) const {
        if (o.num.is_zero()) throw ParseError("division by zero");
        return RatFunc{num * o.den, den * o.num}.reduced();
    }

    RatFunc negated() const { return {-num, den}; }

    RatFunc powed(int k) const { return {pow(num, k), pow(den, k)}; }
};

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            skip_ws();
            if (accept('*'))
                v = v * unary();
            else if (accept('/'))
                v = v.divided_by(unary());
            else
                return v;
        }
    }

    RatFunc unary() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (take() == '-') neg = !neg;
            skip_ws();
        }
        RatFunc v = power();
        return neg ? v.negated() : v;
    }

    RatFunc power() {
        RatFunc base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            int e = integer_literal();
            return base.powed(e);
        }
        return base;
    }

    RatFunc atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            RatFunc v = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'X' || c == 'x') {
            take();
            return RatFunc::of(Poly::x());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RatFunc::of(Poly(Rational(digits())));
        }
        fail("expected a number, 'X' or '('");
        return {};  // unreachable
    }

    int integer_literal() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        std::string d = digits();
        if (d.size() > 4) fail("exponent too large");
        return std::stoi(d);
    }

    std::string digits() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out += take();
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a polynomial; rejects expressions with a nonconstant denominator.
inline Poly parse_poly(std::string_view text) {
    detail::RatFunc r = detail::ExprParser(text).parse();
    if (r.den.degree() != 0) throw ParseError("expected a polynomial, got a rational function");
    return r.num / r.den.coeff(0);
}

/// Parse a Dress ring element (any exact rational-function expression;
/// membership is checked by make).
inline DressElem parse_dress_elem(std::string_view text) {
    detail::RatFunc r = detail::ExprParser(text).parse();
    if (r.num.is_zero()) return DressElem();
    return DressElem::make(r.num, r.den);
}

/// Parse "p ; q" into the row matrix [[p, q], [0, 0]].
inline Mat2 parse_row_matrix(std::string_view text) {
    std::size_t sep = text.find(';');
    if (sep == std::string_view::npos) throw ParseError("expected \"p ; q\" with a ';' separator");
    if (text.find(';', sep + 1) != std::string_view::npos)
        throw ParseError("expected exactly one ';' separator");
    return Mat2::row(parse_dress_elem(text.substr(0, sep)), parse_dress_elem(text.substr(sep + 1)));
}

}  // namespace dress
