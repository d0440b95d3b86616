#include "cy3/errors.hpp"
#include "cy3/poly.hpp"

#include <cctype>

namespace cy3 {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    MultiPoly parse() {
        MultiPoly p = expression();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw LoadError("polynomial '" + std::string(text_) + "' at offset " +
                        std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expression() {
        MultiPoly acc = product();
        for (;;) {
            if (accept('+')) {
                acc += product();
            } else if (accept('-')) {
                acc -= product();
            } else {
                return acc;
            }
        }
    }

    MultiPoly product() {
        MultiPoly acc = unary();
        while (accept('*')) {
            acc *= unary();
        }
        return acc;
    }

    MultiPoly unary() {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("exponent must be a non-negative integer literal");
            }
            const std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 6) {
                fail("exponent too large");
            }
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    MultiPoly atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            return MultiPoly(Integer(std::string(text_.substr(start, pos_ - start)), 10));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return MultiPoly::variable(std::string(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace cy3
