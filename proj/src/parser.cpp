#include "fourcover/multipoly.hpp"

#include <cctype>

namespace fourcover {

namespace {

struct Parser {
    const std::string& s;
    const ContextPtr& ctx;
    std::size_t pos = 0;

    explicit Parser(const std::string& text, const ContextPtr& c) : s(text), ctx(c) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError("syntax error at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }

    Integer parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Integer(s.substr(start, pos - start));
    }

    Rational parse_number() {
        Integer num = parse_uint();
        if (peek() == '/') {
            // rational literal only: a '/' must be followed by digits
            std::size_t save = pos;
            ++pos;
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
                pos = save + 1;
                fail("expected integer denominator");
            }
            Integer den = parse_uint();
            if (den == 0) { pos = save; fail("zero denominator"); }
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    MultiPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MultiPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos;
            return -base();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(ctx, parse_number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos;
            std::string name = parse_ident();
            auto idx = ctx->index(name);
            if (!idx)
                throw UnknownVariable("unknown variable '" + name + "' at offset " +
                                      std::to_string(at));
            return MultiPoly::variable(ctx, *idx);
        }
        fail("expected literal, variable or '('");
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected non-negative integer exponent");
            Integer e = parse_uint();
            if (e > 4096) fail("exponent too large");
            return b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    MultiPoly term() {
        MultiPoly t = factor();
        while (peek() == '*') {
            ++pos;
            t = t * factor();
        }
        return t;
    }

    MultiPoly expr() {
        bool neg = false;
        if (peek() == '-') { ++pos; neg = true; }
        else if (peek() == '+') ++pos;
        MultiPoly total = term();
        if (neg) total = -total;
        while (true) {
            char c = peek();
            if (c == '+') { ++pos; total += term(); }
            else if (c == '-') { ++pos; total -= term(); }
            else break;
        }
        return total;
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, const ContextPtr& ctx) {
    Parser p(text, ctx);
    MultiPoly r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

} // namespace fourcover
