#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "frob/errors.hpp"
#include "frob/poly.hpp"
#include "frob/rational.hpp"

namespace frob {

/// Recursive-descent parser for polynomial expressions in x:
///
///   expr     := term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | 'x' | '(' expr ')'
///   rational := '-'? uint ('/' uint)?
///
/// Whitespace is ignored. The result is lowered directly to an expanded Poly.
class PolyParser {
public:
    static constexpr unsigned long kMaxExponent = 4096;

    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse() {
        Poly result = expr();
        skip_space();
        if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
        return result;
    }

private:
    Poly expr() {
        Poly acc = term();
        for (;;) {
            skip_space();
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_space();
            if (!accept('*')) return acc;
            acc *= factor();
        }
    }

    Poly factor() {
        Poly b = base();
        skip_space();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            const BigInt e = uint_literal();
            if (e > BigInt(kMaxExponent)) {
                throw SyntaxError(at, {}, "exponent larger than " + std::to_string(kMaxExponent));
            }
            return pow(b, e.get_ui());
        }
        return b;
    }

    Poly base() {
        skip_space();
        if (accept('x')) return Poly::identity();
        if (accept('(')) {
            Poly inner = expr();
            skip_space();
            if (!accept(')')) fail({"')'"});
            return inner;
        }
        if (peek() == '-' || is_digit(peek())) return Poly::constant(rational_literal());
        fail({"number", "'x'", "'('", "'-'"});
    }

    Rational rational_literal() {
        const std::size_t start = pos_;
        bool negative = false;
        if (accept('-')) {
            negative = true;
            skip_space();
        }
        BigInt num = uint_literal();
        BigInt den = 1;
        skip_space();
        if (accept('/')) {
            skip_space();
            den = uint_literal();
            if (den == 0) throw DivideByZero("zero denominator in literal at byte " + std::to_string(start));
        }
        return Rational(negative ? BigInt(-num) : num, den);
    }

    BigInt uint_literal() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        if (pos_ == start) fail({"digit"});
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() != c || pos_ >= text_.size()) return false;
        ++pos_;
        return true;
    }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                       text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw SyntaxError(pos_, std::move(expected),
                          pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                              : "unexpected end of input");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace frob
