#pragma once

// Small recursive-descent parser for rational-function expressions over
// Q(zeta_N), used to load the embedded reference tables and by tests.
//
// Grammar:
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := pow (('*'|'/') pow | pow)*          juxtaposition multiplies
//   pow  := atom ['^' ['-'] digits]
//   atom := digits | 'x' | 'i' | 'u' | 'z' | '(' expr ')'
//
// 'z' is zeta_N; 'i' needs 4 | N and 'u' (= exp(2*pi*i/3)) needs 3 | N.
// '/' binds to the next factor only, so denominators are parenthesized:
// "3x/((x-1)(x-u))".

#include <cctype>
#include <optional>
#include <string>
#include <utility>

#include "unital/errors.hpp"
#include "unital/poly.hpp"
#include "unital/unital_fn.hpp"

namespace unital {

// Unreduced quotient of polynomials; reduction happens when converting to a
// UnitalFn (exponent subtraction after peeling both sides).
struct Frac {
    Poly num;
    Poly den;

    static Frac of(Poly p) {
        const int n = p.order();
        return Frac{std::move(p), Poly::one(n)};
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac{a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac{a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Frac operator*(const Frac& a, const Frac& b) { return Frac{a.num * b.num, a.den * b.den}; }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num.is_zero()) throw ParseError("division by zero expression");
        return Frac{a.num * b.den, a.den * b.num};
    }

    Frac negated() const { return Frac{Poly::zero(num.order()) - num, den}; }

    Frac pow(long e) const {
        const int n = num.order();
        Frac base = e >= 0 ? *this : Frac{den, num};
        if (e < 0 && num.is_zero()) throw ParseError("zero to a negative power");
        long steps = e >= 0 ? e : -e;
        Frac acc{Poly::one(n), Poly::one(n)};
        for (long i = 0; i < steps; ++i) acc = acc * base;
        return acc;
    }
};

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& src, int order) : src_(src), n_(order) {}

    Frac parse() {
        Frac f = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return f;
    }

private:
    Frac expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        Frac acc = term();
        if (neg) acc = acc.negated();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                take();
                Frac t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Frac term() {
        Frac acc = power();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                take();
                acc = acc * power();
            } else if (c == '/') {
                take();
                acc = acc / power();
            } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) || is_symbol(c)) {
                acc = acc * power();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Frac power() {
        Frac base = atom();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                take();
                neg = true;
            }
            long e = integer();
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    Frac atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Frac inner = expr();
            skip_ws();
            if (take() != ')') fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return Frac::of(Poly::constant(CycNum::from_rat(n_, Rat(v))));
        }
        if (c == 'x') {
            take();
            return Frac::of(Poly::linear_root(n_, CycNum::zero(n_)));
        }
        if (c == 'z') {
            take();
            return Frac::of(Poly::constant(CycNum::root_of_unity(n_, 1)));
        }
        if (c == 'i') {
            take();
            if (n_ % 4 != 0) fail("'i' needs an order divisible by 4");
            return Frac::of(Poly::constant(CycNum::root_of_unity(n_, n_ / 4)));
        }
        if (c == 'u') {
            take();
            if (n_ % 3 != 0) fail("'u' needs an order divisible by 3");
            return Frac::of(Poly::constant(CycNum::root_of_unity(n_, n_ / 3)));
        }
        fail("unexpected character");
        return Frac::of(Poly::zero(n_));  // unreachable
    }

    long integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (take() - '0');
        return v;
    }

    static bool is_symbol(char c) { return c == 'x' || c == 'i' || c == 'u' || c == 'z'; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    char take() { return pos_ < src_.size() ? src_[pos_++] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("parse error at offset " + std::to_string(pos_) + " in \"" + src_ + "\": " + msg);
    }

    const std::string& src_;
    int n_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Frac parse_fraction(const std::string& src, int order) {
    return detail::ExprParser(src, order).parse();
}

// Converts an exact quotient of polynomials into canonical factored form.
// Empty result: numerator or denominator has a root outside Gamma_N^0.
inline std::optional<UnitalFn> to_unital(const Frac& f) {
    if (f.num.is_zero()) throw ParseError("zero numerator is not a unital function");
    if (f.den.is_zero()) throw ParseError("zero denominator");
    auto top = peel_roots(f.num);
    auto bot = peel_roots(f.den);
    if (!top || !bot) return std::nullopt;
    std::map<Site, int> exps;
    for (const auto& [site, e] : top->spec.exps) exps[site] += e;
    for (const auto& [site, e] : bot->spec.exps) exps[site] -= e;
    for (auto it = exps.begin(); it != exps.end();) {
        if (it->second == 0)
            it = exps.erase(it);
        else
            ++it;
    }
    if (exps.empty()) throw ParseError("expression is a constant, not a unital function");
    return UnitalFn(f.num.order(), top->constant / bot->constant, std::move(exps));
}

inline UnitalFn parse_unital(const std::string& src, int order) {
    auto fn = to_unital(parse_fraction(src, order));
    if (!fn) throw ParseError("roots outside Gamma_N^0 in \"" + src + "\"");
    return *fn;
}

// Constant expressions on the value line; "inf" denotes infinity.
inline P1Value parse_p1(const std::string& src, int order) {
    if (src == "inf") return P1Value::infinity(order);
    Frac f = parse_fraction(src, order);
    if (f.num.degree() > 0 || f.den.degree() > 0) throw ParseError("value expression not constant");
    if (f.den.is_zero()) return P1Value::infinity(order);
    if (f.num.is_zero()) return P1Value::finite(CycNum::zero(order));
    return P1Value::finite(f.num.coeff(0) / f.den.coeff(0));
}

}  // namespace unital
