#include "potentia/c1/formula.hpp"
#include "potentia/errors.hpp"

#include <cctype>

namespace potentia::c1 {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FormulaPtr run() {
        skip_ws();
        if (at_end()) throw ParseError("empty formula", 1);
        FormulaPtr f = parse_impl();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, pos_ + 1);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (at_end() || peek() != c) return false;
        ++pos_;
        return true;
    }

    bool consume_arrow() {
        skip_ws();
        if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
            pos_ += 2;
            return true;
        }
        return false;
    }

    FormulaPtr parse_impl() {
        FormulaPtr f = parse_disj();
        while (consume_arrow()) f = Formula::impl(f, parse_disj());
        return f;
    }

    FormulaPtr parse_disj() {
        FormulaPtr f = parse_conj();
        while (consume('|')) f = Formula::disj(f, parse_conj());
        return f;
    }

    FormulaPtr parse_conj() {
        FormulaPtr f = parse_unary();
        while (consume('&')) f = Formula::conj(f, parse_unary());
        return f;
    }

    FormulaPtr parse_unary() {
        skip_ws();
        if (at_end()) fail("expected a formula");
        if (peek() == '~') {
            ++pos_;
            if (!at_end() && peek() == '*') {
                ++pos_;
                return Formula::strong_neg(parse_unary());
            }
            return Formula::neg(parse_unary());
        }
        if (peek() == '@') {
            ++pos_;
            return Formula::ball(parse_unary());
        }
        return parse_primary();
    }

    FormulaPtr parse_primary() {
        skip_ws();
        if (at_end()) fail("expected a formula");
        if (peek() == '(') {
            ++pos_;
            FormulaPtr f = parse_impl();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return f;
        }
        char c = peek();
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_') {
            std::size_t start = pos_;
            while (!at_end()) {
                char d = peek();
                bool ok = (d >= 'A' && d <= 'Z') || (d >= 'a' && d <= 'z') ||
                          (d >= '0' && d <= '9') || d == '_';
                if (!ok) break;
                ++pos_;
            }
            return Formula::atom(std::string(text_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
    return Parser(text).run();
}

}  // namespace potentia::c1
