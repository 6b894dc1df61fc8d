#include <sumrec/exprparse.hpp>

#include <cctype>

namespace sumrec {
namespace detail {

Lexer::Lexer(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
            if (i < text.size() && text[i] == '.') throw ParseError("decimal literals are not supported", i);
            tokens_.push_back({TokKind::Number, num, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                id += text[i++];
            tokens_.push_back({TokKind::Ident, id, start});
            continue;
        }
        TokKind k;
        switch (c) {
            case '+': k = TokKind::Plus; break;
            case '-': k = TokKind::Minus; break;
            case '*': k = TokKind::Star; break;
            case '/': k = TokKind::Slash; break;
            case '^': k = TokKind::Caret; break;
            case '(': k = TokKind::LParen; break;
            case ')': k = TokKind::RParen; break;
            case ',': k = TokKind::Comma; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        tokens_.push_back({k, std::string(1, c), start});
        ++i;
    }
    tokens_.push_back({TokKind::End, "", text.size()});
}

bool Lexer::accept(TokKind k) {
    if (peek().kind != k) return false;
    next();
    return true;
}

Token Lexer::expect(TokKind k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    return next();
}

namespace {

RatFunc parse_expr(Lexer& lex);

long parse_int_exponent(Lexer& lex) {
    bool neg = false;
    bool paren = lex.accept(TokKind::LParen);
    if (lex.accept(TokKind::Minus)) neg = true;
    Token t = lex.expect(TokKind::Number, "integer exponent");
    if (paren) lex.expect(TokKind::RParen, "')'");
    long v = std::stol(t.text);
    return neg ? -v : v;
}

RatFunc parse_base(Lexer& lex) {
    const Token& t = lex.peek();
    if (t.kind == TokKind::Number) {
        Token num = lex.next();
        return RatFunc(MultiPoly(rational_from_string(num.text)));
    }
    if (t.kind == TokKind::Ident) {
        Token id = lex.next();
        if (lex.peek().kind == TokKind::LParen)
            throw ParseError("function call '" + id.text + "(...)' not allowed in this expression", id.pos);
        return RatFunc::variable(Symbols::intern(id.text));
    }
    if (t.kind == TokKind::LParen) {
        lex.next();
        RatFunc inner = parse_expr(lex);
        lex.expect(TokKind::RParen, "')'");
        return inner;
    }
    throw ParseError("expected number, variable, or '('", t.pos);
}

RatFunc parse_factor(Lexer& lex) {
    RatFunc base = parse_base(lex);
    if (lex.accept(TokKind::Caret)) {
        long e = parse_int_exponent(lex);
        return base.pow(e);
    }
    return base;
}

bool starts_factor(TokKind k) {
    return k == TokKind::Number || k == TokKind::Ident || k == TokKind::LParen;
}

RatFunc parse_term(Lexer& lex) {
    RatFunc acc = parse_factor(lex);
    for (;;) {
        if (lex.accept(TokKind::Star)) {
            acc *= parse_factor(lex);
        } else if (lex.accept(TokKind::Slash)) {
            acc /= parse_factor(lex);
        } else if (starts_factor(lex.peek().kind)) {
            acc *= parse_factor(lex);  // juxtaposition
        } else {
            break;
        }
    }
    return acc;
}

RatFunc parse_expr(Lexer& lex) {
    bool neg = false;
    if (lex.accept(TokKind::Minus))
        neg = true;
    else
        lex.accept(TokKind::Plus);
    RatFunc acc = parse_term(lex);
    if (neg) acc = -acc;
    for (;;) {
        if (lex.accept(TokKind::Plus)) {
            acc += parse_term(lex);
        } else if (lex.accept(TokKind::Minus)) {
            acc -= parse_term(lex);
        } else {
            break;
        }
    }
    return acc;
}

}  // namespace
}  // namespace detail

RatFunc parse_ratfunc_expr(const std::string& text) {
    detail::Lexer lex(text);
    RatFunc r = detail::parse_expr(lex);
    if (lex.peek().kind != detail::TokKind::End)
        throw ParseError("trailing input", lex.peek().pos);
    return r;
}

}  // namespace sumrec
