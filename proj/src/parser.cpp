#include "molq/parser.hpp"

#include <cctype>

namespace molq {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    TermPtr run() {
        TermPtr t = join_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return t;
    }

private:
    TermPtr join_expr() {
        TermPtr t = meet_expr();
        while (peek() == '|') {
            ++pos_;
            t = Term::join(t, meet_expr());
        }
        return t;
    }

    TermPtr meet_expr() {
        TermPtr t = postfix();
        while (peek() == '&') {
            ++pos_;
            t = Term::meet(t, postfix());
        }
        return t;
    }

    TermPtr postfix() {
        TermPtr t = atom();
        while (peek() == '\'') {
            ++pos_;
            t = Term::ortho(t);
        }
        return t;
    }

    TermPtr atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            TermPtr t = join_expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return t;
        }
        if (c == '0') {
            ++pos_;
            return Term::zero();
        }
        if (c == '1') {
            ++pos_;
            return Term::one();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return Term::var(std::string(text_.substr(start, pos_ - start)));
        }
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    // Returns the next non-space character without consuming it, '\0' at end.
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace molq
