#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "susp/polynomial.hpp"

namespace susp {

namespace detail {

// Recursive-descent parser for
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base (('^' | '**') uint)?
//   base   := identifier | integer | integer '/' integer | '(' expr ')'
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, Context ctx) : text_(text), ctx_(std::move(ctx)) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        Polynomial p = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        return p;
    }

private:
    Polynomial expr() {
        skip_space();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip_space();
            if (peek() != '*' || peek(1) == '*') break;
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_space();
        bool power = false;
        if (peek() == '^') {
            ++pos_;
            power = true;
        } else if (peek() == '*' && peek(1) == '*') {
            pos_ += 2;
            power = true;
        }
        if (!power) return b;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a nonnegative integer");
        const std::string digits = read_digits();
        if (digits.size() > 6) fail("exponent too large");
        const unsigned long e = std::stoul(digits);
        return b.pow(static_cast<unsigned>(e));
    }

    Polynomial base() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_space();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string num = read_digits();
            const std::size_t save = pos_;
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator after '/'");
                const std::string den = read_digits();
                Integer d(den);
                if (d == 0) fail("zero denominator");
                Rational r{Integer(num), d};
                r.canonicalize();
                return Polynomial::constant(ctx_, r);
            }
            pos_ = save;
            return Polynomial::constant(ctx_, Rational(Integer(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += text_[pos_++];
            auto idx = ctx_->find(name);
            if (!idx) {
                pos_ = start;
                fail("undeclared identifier '" + name + "'");
            }
            return Polynomial::variable(ctx_, *idx);
        }
        if (at_end()) fail("unexpected end of expression");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string read_digits() {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
        return s;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(what, line, column);
    }

    std::string_view text_;
    Context ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial expression over the declared variables. Whitespace is
/// insignificant and '**' is accepted for '^'.
inline Polynomial parse_polynomial(std::string_view text, const Context& ctx) {
    return detail::ExpressionParser(text, ctx).parse();
}

inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                                   Limits limits = {}) {
    return parse_polynomial(text, make_context(variables, limits));
}

}  // namespace susp
