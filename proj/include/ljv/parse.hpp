/**
 * Tokenizer and polynomial expression parser shared by the input formats.
 */

#ifndef LJV_PARSE_HPP
#define LJV_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactlin.hpp"

namespace ljv {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg), line(line_), col(col_)
    {
    }
};

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind;
    std::string text;
    int line, col;
};

/**
 * Identifiers, unsigned decimal numbers and single-character symbols.
 * '#' starts a comment that runs to the end of the line.
 */
inline std::vector<Token> tokenize(const std::string& src)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            }
            else
                ++col;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        int l0 = line, c0 = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Token::Ident, src.substr(i, j - i), l0, c0});
            advance(j - i);
        }
        else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Number, src.substr(i, j - i), l0, c0});
            advance(j - i);
        }
        else if (std::string("{}:;,=+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::Symbol, std::string(1, c), l0, c0});
            advance(1);
        }
        else
            throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next()
    {
        const Token& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Token::End; }
    bool is_symbol(const std::string& s) const { return peek().kind == Token::Symbol && peek().text == s; }
    bool accept(const std::string& s)
    {
        if (!is_symbol(s)) return false;
        next();
        return true;
    }
    void expect(const std::string& s)
    {
        if (!accept(s)) fail("expected '" + s + "'");
    }
    std::string expect_ident()
    {
        if (peek().kind != Token::Ident) fail("expected identifier");
        return next().text;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        const Token& t = peek();
        throw ParseError(msg + (t.kind == Token::End ? " at end of input" : " near '" + t.text + "'"), t.line, t.col);
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

/**
 * Recursive-descent parser for polynomial expressions:
 *   expr := ['+'|'-'] term {('+'|'-') term}
 *   term := factor {['*'] factor}
 *   factor := atom ['^' number]
 *   atom := number ['/' number] | variable | '(' expr ')'
 */
class PolyParser {
public:
    PolyParser(TokenStream& ts, const std::vector<std::string>& vars) : ts_(ts), vars_(vars) {}

    Poly expr()
    {
        bool neg = false;
        if (ts_.accept("-")) neg = true;
        else ts_.accept("+");
        Poly acc = term();
        if (neg) acc = Rational(-1) * acc;
        for (;;) {
            if (ts_.accept("+")) acc += term();
            else if (ts_.accept("-")) acc -= term();
            else break;
        }
        return acc;
    }

private:
    bool starts_atom() const
    {
        const Token& t = ts_.peek();
        return t.kind == Token::Ident || t.kind == Token::Number || (t.kind == Token::Symbol && t.text == "(");
    }

    Poly term()
    {
        Poly acc = factor();
        for (;;) {
            if (ts_.accept("*")) acc = acc * factor();
            else if (starts_atom()) acc = acc * factor();
            else break;
        }
        return acc;
    }

    Poly factor()
    {
        Poly a = atom();
        if (ts_.accept("^")) {
            if (ts_.peek().kind != Token::Number) ts_.fail("expected exponent");
            a = a.pow(static_cast<unsigned>(std::stoul(ts_.next().text)));
        }
        return a;
    }

    Poly atom()
    {
        const Token& t = ts_.peek();
        if (t.kind == Token::Number) {
            Rational q(Integer(ts_.next().text));
            if (ts_.accept("/")) {
                if (ts_.peek().kind != Token::Number) ts_.fail("expected denominator");
                Integer d(ts_.next().text);
                if (d == 0) ts_.fail("zero denominator");
                q /= Rational(d);
            }
            return Poly::constant(vars_, q);
        }
        if (t.kind == Token::Ident) {
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == t.text) {
                    ts_.next();
                    return Poly::variable(vars_, i);
                }
            ts_.fail("unknown variable");
        }
        if (ts_.accept("(")) {
            Poly p = expr();
            ts_.expect(")");
            return p;
        }
        ts_.fail("expected expression");
    }

    TokenStream& ts_;
    const std::vector<std::string>& vars_;
};

inline Poly parse_poly(const std::string& text, const std::vector<std::string>& vars)
{
    TokenStream ts(tokenize(text));
    PolyParser pp(ts, vars);
    Poly p = pp.expr();
    if (!ts.at_end()) ts.fail("trailing input");
    return p;
}

/** Linear form from a homogeneous degree-1 polynomial; throws otherwise. */
inline LinearForm poly_to_linear(const Poly& p)
{
    LinearForm v(p.vars().size(), Rational(0));
    for (const auto& [e, c] : p.terms()) {
        unsigned d = 0;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) {
                d += e[i];
                idx = i;
            }
        if (d != 1) throw std::invalid_argument("not a linear form: " + p.str());
        v[idx] = c;
    }
    return v;
}

}  // namespace ljv

#endif
