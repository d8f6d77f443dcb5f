#include <cctype>

#include "ivp/error.hpp"
#include "ivp/poly.hpp"

namespace ivp {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RatPoly parse() {
        skip_space();
        if (text_.substr(pos_).starts_with("coeffs:")) return parse_coeffs();
        std::size_t terms = 0;
        IntPoly numerator = expression(&terms);
        skip_space();
        Integer denominator = 1;
        if (peek() == '/') {
            if (terms != 1) throw ParseError("denominator follows a sum; parenthesize the numerator", pos_);
            ++pos_;
            denominator = positive_integer();
            skip_space();
        }
        if (pos_ != text_.size()) {
            if (peek() == '.') throw ParseError("non-integer coefficient", pos_);
            if (peek() == '/') throw ParseError("only one trailing denominator is allowed", pos_);
            throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
        }
        return RatPoly(std::move(numerator), std::move(denominator));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    Integer digits() {
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", pos_);
        if (peek() == '.') throw ParseError("non-integer coefficient", pos_);
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Integer positive_integer() {
        skip_space();
        const std::size_t at = pos_;
        if (peek() == '-') throw ParseError("denominator must be a positive integer", at);
        Integer d = digits();
        if (d == 0) throw ParseError("zero denominator", at);
        return d;
    }

    IntPoly expression(std::size_t* terms = nullptr) {
        skip_space();
        IntPoly acc = term();
        std::size_t count = 1;
        while (true) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            IntPoly t = term();
            if (c == '+') acc += t;
            else acc -= t;
            ++count;
        }
        if (terms) *terms = count;
        return acc;
    }

    IntPoly term() {
        IntPoly acc = factor();
        while (true) {
            skip_space();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (c == 'x' || c == '(') {
                acc *= factor();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                throw ParseError("expected an operator before number", pos_);
            } else {
                break;
            }
        }
        return acc;
    }

    IntPoly factor() {
        skip_space();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '+') {
            ++pos_;
            return factor();
        }
        IntPoly base = primary();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const std::size_t at = pos_;
            if (peek() == '-') throw ParseError("negative exponent", at);
            Integer e = digits();
            if (e > kMaxExponent) throw ParseError("exponent too large", at);
            base = pow(base, static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    IntPoly primary() {
        skip_space();
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return IntPoly::x();
        }
        if (c == '(') {
            ++pos_;
            IntPoly inner = expression();
            skip_space();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (at_digit()) return IntPoly::constant(digits());
        if (c == '.') throw ParseError("non-integer coefficient", pos_);
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    RatPoly parse_coeffs() {
        pos_ += 7;
        std::vector<Integer> coeffs;
        while (true) {
            skip_space();
            bool negative = false;
            if (peek() == '-' || peek() == '+') {
                negative = peek() == '-';
                ++pos_;
            }
            Integer v = digits();
            coeffs.push_back(negative ? Integer(-v) : v);
            skip_space();
            if (peek() != ',') break;
            ++pos_;
        }
        Integer denominator = 1;
        if (peek() == '/') {
            ++pos_;
            denominator = positive_integer();
            skip_space();
        }
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
        return RatPoly(IntPoly(std::move(coeffs)), std::move(denominator));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RatPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

} // namespace ivp
