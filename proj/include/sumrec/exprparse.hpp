#pragma once

#include <sumrec/ratfunc.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace sumrec {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

namespace detail {

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text);
    const Token& peek() const { return tokens_[index_]; }
    Token next() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }
    bool accept(TokKind k);
    Token expect(TokKind k, const char* what);

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace detail

// Arithmetic over +,-,*,/,^ with integer literals, identifiers (interned as
// variables), parentheses and implicit multiplication by juxtaposition.
// Exponents are integer literals. Function-call syntax is rejected here.
RatFunc parse_ratfunc_expr(const std::string& text);

}  // namespace sumrec
