#include "polytrope/io.hpp"

#include <cctype>
#include <sstream>

namespace polytrope {

std::string render_monomial(const Monomial& m, const VarSet& vars) {
    std::string s;
    for (auto& [v, k] : m.e) {
        if (!s.empty()) s += "*";
        s += vars.name(v);
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

std::string render(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : p.terms) {
        Rational abs = c < 0 ? Rational(-c) : c;
        std::string sign = c < 0 ? "-" : "+";
        std::string body;
        if (m.is_one())
            body = to_string(abs);
        else if (abs == 1)
            body = render_monomial(m, p.vars);
        else
            body = to_string(abs) + "*" + render_monomial(m, p.vars);
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += " " + sign + " " + body;
    }
    return out;
}

std::string render(const XPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : p.terms) {
        if (!out.empty()) out += " + ";
        std::string coeff = "(" + render(c) + ")";
        if (m.is_one())
            out += coeff;
        else
            out += coeff + "*" + render_monomial(m, p.vars);
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& str) : s(str) { skip(); }
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    char take() {
        char c = s[i++];
        skip();
        return c;
    }
    std::string number() {
        size_t j = i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        std::string tok = s.substr(j, i - j);
        skip();
        return tok;
    }
    std::string word() {
        size_t j = i;
        while (i < s.size() &&
               std::isalnum(static_cast<unsigned char>(s[i])))
            ++i;
        std::string tok = s.substr(j, i - j);
        skip();
        return tok;
    }
};

}  // namespace

QPoly parse_poly(const std::string& text, const VarSet& vars) {
    QPoly p(vars);
    Lexer lex(text);
    bool first = true;
    while (!lex.done()) {
        int sign = 1;
        if (lex.peek() == '+' || lex.peek() == '-') {
            if (lex.take() == '-') sign = -1;
        } else if (!first) {
            throw DomainError("expected '+' or '-' in polynomial");
        }
        first = false;
        Rational coeff(sign);
        Monomial mono;
        bool expect_factor = true;
        while (expect_factor) {
            if (lex.done()) throw DomainError("truncated polynomial term");
            if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
                coeff *= parse_rational(lex.number());
            } else {
                std::string name = lex.word();
                int v = vars.find(name);
                if (v < 0) throw DomainError("unknown variable '" + name + "'");
                int e = 1;
                if (!lex.done() && lex.peek() == '^') {
                    lex.take();
                    e = std::stoi(lex.number());
                }
                mono = mono * Monomial::var(v, e);
            }
            expect_factor = !lex.done() && lex.peek() == '*';
            if (expect_factor) lex.take();
        }
        p.add_term(mono, coeff);
    }
    return p;
}

}  // namespace polytrope
