#include "lambda0/parse.hpp"

#include "lambda0/error.hpp"

#include <cctype>
#include <string>

namespace lambda0 {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly parse() {
        Poly p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expression() {
        Poly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    Poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (!accept('^')) return base;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("exponent must be a nonnegative integer literal");
        std::string digits = read_digits();
        if (digits.size() > 6) fail("exponent too large");
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
            fail("implicit multiplication is not allowed");
        return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        Poly result;
        if (c == '(') {
            ++pos_;
            result = expression();
            if (!accept(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = read_digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected denominator");
                std::string den = read_digits();
                if (mpz_class(den) == 0) fail("zero denominator");
                lit += "/" + den;
            }
            result = Poly::constant(Rational::parse(lit));
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            result = symbol();
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        skip_space();
        if (pos_ < text_.size()) {
            char next = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(next)) || next == '(')
                fail("implicit multiplication is not allowed");
        }
        return result;
    }

    Poly symbol() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name == "t") return t_poly();
        if (name == "u") return u_poly();
        if (name == "v") return v_poly();
        if (name == "s2") return Poly::variable(Variable::sigma2());
        if (name == "s3") return Poly::variable(Variable::sigma3());
        if (name == "a") return Poly::variable(Variable::alpha());
        if (name.size() >= 2 && name[0] == 'x') {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits && name.size() <= 7) return Poly::x(std::stoi(name.substr(1)));
        }
        if (name == "x" && pos_ < text_.size() && text_[pos_] == '-') {
            pos_ = start;
            fail("x index must be a nonnegative integer");
        }
        pos_ = start;
        fail("unknown symbol '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace lambda0
