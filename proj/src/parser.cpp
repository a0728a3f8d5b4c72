#include "logcsm/parser.hpp"

#include <cctype>

namespace logcsm {
namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& vars;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    Polynomial parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+')) acc = acc + parse_term();
            else if (accept('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (accept('^')) {
            skip_ws();
            size_t at = pos;
            long e = parse_integer();
            if (e <= 0) throw ParseError("exponent must be a positive integer", at);
            Polynomial r = Polynomial::constant(base.nvars(), Rational(1));
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            long v = parse_integer();
            return Polynomial::constant((int)vars.size(), Rational(v));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t at = pos;
            std::string name = parse_ident();
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return Polynomial::variable((int)vars.size(), (int)i);
            throw ParseError("unknown variable '" + name + "'", at);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long parse_integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
            fail("expected integer");
        long v = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000000L) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    std::string parse_ident() {
        std::string name;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            name += text[pos++];
        return name;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& varnames) {
    Parser p{text, varnames};
    Polynomial result = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return result;
}

std::vector<std::string> detect_variables(const std::string& text) {
    std::vector<std::string> vars;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string name;
            while (i < text.size() &&
                   (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
                name += text[i++];
            if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
        } else {
            ++i;
        }
    }
    return vars;
}

}  // namespace logcsm
