#include "collatz/input_expr.hpp"

namespace collatz {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Natural parse() {
        Natural value = term();
        skip_space();
        if (!done()) {
            const char op = peek();
            if (op != '+' && op != '-') throw ParseError("expected '+', '-' or end", pos_);
            ++pos_;
            const std::size_t rhs_at = pos_;
            const Natural rhs = term();
            if (op == '+') {
                value += rhs;
            } else {
                if (value < rhs) throw ParseError("subtraction underflows", rhs_at);
                value -= rhs;
            }
            skip_space();
            if (!done()) throw ParseError("trailing input", pos_);
        }
        return value;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }

    Natural term() {
        Natural base = literal();
        skip_space();
        if (!done() && peek() == '^') {
            ++pos_;
            const std::size_t exp_at = pos_;
            const Natural exponent = literal();
            if (!exponent.fits_u64()) throw ParseError("exponent too large", exp_at);
            return Natural::pow(base, exponent.to_u64());
        }
        return base;
    }

    Natural literal() {
        skip_space();
        const std::size_t start = pos_;
        std::string digits;
        while (!done()) {
            const char c = peek();
            if (c >= '0' && c <= '9') {
                digits.push_back(c);
                ++pos_;
            } else if ((c == ',' || c == '_') && !digits.empty()) {
                ++pos_;  // digit separator
            } else {
                break;
            }
        }
        if (digits.empty()) throw ParseError("expected a decimal literal", start);
        return Natural::from_decimal(digits);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Natural parse_input(std::string_view text) {
    Parser parser(text);
    const Natural value = parser.parse();
    if (value.is_zero()) throw ParseError("value must be >= 1", 0);
    return value;
}

}  // namespace collatz
