#include "qfa/amplitude.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qfa/errors.hpp"

namespace qfa {
namespace {

class AmplitudeParser {
public:
    explicit AmplitudeParser(std::string_view text) : text_(text) {}

    Complex parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty amplitude expression", pos_);
        Complex value = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            throw ParseError("amplitude is not finite", 0);
        }
        return value;
    }

private:
    Complex expr() {
        Complex value = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    Complex term() {
        Complex value = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                value *= unary();
            } else if (peek() == '/') {
                const std::size_t at = pos_;
                ++pos_;
                Complex divisor = unary();
                if (std::abs(divisor) == 0.0) throw ParseError("division by zero", at);
                value /= divisor;
            } else {
                return value;
            }
        }
    }

    Complex unary() {
        skip_ws();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return primary();
    }

    Complex primary() {
        skip_ws();
        const std::size_t start = pos_;
        if (accept('(')) {
            Complex value = expr();
            expect(')');
            return value;
        }
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                name.push_back(text_[pos_++]);
            }
            if (name == "i") return {0.0, 1.0};
            if (name == "pi") return {std::numbers::pi, 0.0};
            if (name == "sqrt" || name == "exp") {
                skip_ws();
                expect('(');
                Complex arg = expr();
                expect(')');
                // -x carries a negative zero imaginary part, which would pick
                // the lower branch of sqrt.
                if (arg.imag() == 0.0) arg.imag(0.0);
                return name == "sqrt" ? std::sqrt(arg) : std::exp(arg);
            }
            throw ParseError("unknown identifier '" + name + "'", start);
        }
        if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    Complex number() {
        const std::size_t start = pos_;
        bool digits = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            digits = true;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                digits = true;
            }
        }
        if (!digits) throw ParseError("malformed number", start);
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        const std::string literal(text_.substr(start, pos_ - start));
        return {std::strtod(literal.c_str(), nullptr), 0.0};
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string format_real(double x) {
    if (x == std::floor(x) && std::abs(x) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", x);
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Complex parse_amplitude(std::string_view expr) { return AmplitudeParser(expr).parse(); }

std::string format_amplitude(Complex value) {
    const double re = value.real() == 0.0 ? 0.0 : value.real();
    const double im = value.imag() == 0.0 ? 0.0 : value.imag();
    if (im == 0.0) return format_real(re);
    std::string imag = format_real(std::abs(im)) + "*i";
    if (re == 0.0) return (im < 0 ? "-" : "") + imag;
    return format_real(re) + (im < 0 ? "-" : "+") + imag;
}

}  // namespace qfa
