#include "dgla/parse.hpp"

#include <cctype>
#include <string>

#include "dgla/errors.hpp"

namespace dgla {

namespace {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw parse_error(std::string("expected '") + c + "'", pos);
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    Rational rational(bool negative) {
        skip_ws();
        std::size_t start = pos;
        std::string text = negative ? "-" : "";
        auto digits = [&] {
            std::size_t first = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                text.push_back(src[pos++]);
            return pos > first;
        };
        if (!digits())
            throw parse_error("expected digits", pos);
        if (pos < src.size() && src[pos] == '/') {
            text.push_back(src[pos++]);
            if (!digits())
                throw parse_error("expected denominator digits", pos);
        }
        try {
            return Rational::from_string(text);
        } catch (const domain_error& e) {
            throw parse_error(e.what(), start);
        }
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto tail = [&](char c) {
            return head(c) || std::isdigit(static_cast<unsigned char>(c));
        };
        if (pos < src.size() && head(src[pos])) {
            ++pos;
            while (pos < src.size() && tail(src[pos]))
                ++pos;
        }
        if (pos == start)
            throw parse_error("expected a generator name", pos);
        return std::string(src.substr(start, pos - start));
    }

    Expr factor() {
        if (eat('[')) {
            Expr l = expr();
            expect(',');
            Expr r = expr();
            expect(']');
            return Expr::bracket(std::move(l), std::move(r));
        }
        if (eat('(')) {
            Expr inner = expr();
            expect(')');
            return inner;
        }
        return Expr::generator(identifier());
    }

    Expr term() {
        bool negative = false;
        if (peek() == '-') {
            ++pos;
            negative = true;
            if (!at_digit()) // unary minus before a factor
                return Expr::scale(Rational(-1), factor());
        }
        if (!at_digit()) {
            Expr f = factor();
            return negative ? Expr::scale(Rational(-1), std::move(f)) : std::move(f);
        }
        std::size_t coeff_pos = pos;
        Rational c = rational(negative);
        if (eat('*'))
            return Expr::scale(std::move(c), factor());
        if (c.is_zero())
            return Expr::zero();
        throw parse_error("a bare scalar is not a Lie element; expected '*'", coeff_pos);
    }

    Expr expr() {
        Expr acc = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = Expr::sum(std::move(acc), term());
            } else if (c == '-') {
                ++pos;
                acc = Expr::difference(std::move(acc), term());
            } else {
                return acc;
            }
        }
    }
};

} // namespace

Expr parse_expr(std::string_view source) {
    Parser p{source};
    if (p.at_end())
        throw parse_error("empty expression", 0);
    Expr e = p.expr();
    if (!p.at_end())
        throw parse_error("trailing input", p.pos);
    return e;
}

Rational parse_rational(std::string_view source) {
    Parser p{source};
    if (p.at_end())
        throw parse_error("empty rational", 0);
    bool negative = p.eat('-');
    Rational r = p.rational(negative);
    if (!p.at_end())
        throw parse_error("trailing input", p.pos);
    return r;
}

} // namespace dgla
