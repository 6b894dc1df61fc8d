#include <sumrec/hyperterm.hpp>

#include <sumrec/exprparse.hpp>

#include <sstream>
#include <stdexcept>

namespace sumrec {

namespace {

using detail::Lexer;
using detail::TokKind;
using detail::Token;

bool is_integer_affine(const MultiPoly& p) {
    for (auto& [m, c] : p.terms()) {
        if (m.total_degree() > 1) return false;
        if (!is_integer(c)) return false;
        for (auto& [v, e] : m.exps)
            if (v != kVarN && v != kVarK) return false;
    }
    return true;
}

long affine_delta(const MultiPoly& l, int var) {
    // L(var+1,.) - L(var,.) for affine L: the coefficient of var
    for (auto& [m, c] : l.terms())
        if (m.exponent(var) == 1) return to_long(RatFunc(MultiPoly(c)).constant_value());
    return 0;
}

// (L+delta)! / L! as a rational function
RatFunc falling_ratio(const MultiPoly& l, long delta) {
    RatFunc r(Rational(1));
    if (delta >= 0) {
        for (long t = 1; t <= delta; ++t) r *= RatFunc(l + MultiPoly(Rational(t)));
    } else {
        for (long t = 0; t < -delta; ++t) r /= RatFunc(l - MultiPoly(Rational(t)));
    }
    return r;
}

RatFunc factor_shift_quotient(const TermFactor& f, int var) {
    RatFunc one(Rational(1));
    RatFunc q = one;
    switch (f.kind) {
        case FactorKind::Const:
            return one;
        case FactorKind::Binomial: {
            long d1 = affine_delta(f.arg1, var), d2 = affine_delta(f.arg2, var);
            q = falling_ratio(f.arg1, d1) / (falling_ratio(f.arg2, d2) * falling_ratio(f.arg1 - f.arg2, d1 - d2));
            break;
        }
        case FactorKind::Factorial:
            q = falling_ratio(f.arg1, affine_delta(f.arg1, var));
            break;
        case FactorKind::Power: {
            long d = affine_delta(f.arg1, var);
            if (f.param_base >= 0)
                q = RatFunc::variable(f.param_base).pow(d);
            else
                q = RatFunc(MultiPoly(pow_rational(f.const_base, d)));
            break;
        }
        case FactorKind::SignPow: {
            long d = affine_delta(f.arg1, var);
            q = RatFunc(MultiPoly(Rational((d % 2 + 2) % 2 == 0 ? 1 : -1)));
            break;
        }
        case FactorKind::Poly: {
            MultiPoly shifted = f.arg1.shifted(var, 1);
            q = RatFunc(shifted, f.arg1);
            break;
        }
    }
    return q.pow(f.exponent);
}

MultiPoly expr_to_poly(const RatFunc& rf, std::size_t pos, const char* what) {
    if (!rf.is_polynomial()) throw ParseError(std::string(what) + " must be polynomial", pos);
    MultiPoly p = rf.num();
    Rational d = rf.den().constant_value();
    if (!is_one(d)) p = p.scaled(Rational(1) / d);
    return p;
}

}  // namespace

HyperTerm HyperTerm::parse(const std::string& text,
                           const std::vector<std::pair<std::string, std::string>>& rename) {
    // apply identifier renaming at token level by rewriting the text through
    // a fresh parse of each argument expression; simplest is string-level
    // whole-token replacement before lexing
    std::string src = text;
    if (!rename.empty()) {
        std::string out;
        std::size_t i = 0;
        while (i < src.size()) {
            char c = src[i];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id;
                while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                    id += src[i++];
                for (auto& [from, to] : rename)
                    if (id == from) {
                        id = to;
                        break;
                    }
                out += id;
            } else {
                out += src[i++];
            }
        }
        src = out;
    }

    Lexer lex(src);
    HyperTerm h;
    RatFunc rn(Rational(1)), rk(Rational(1));
    bool first = true;
    std::ostringstream support;
    for (;;) {
        if (!first && !lex.accept(TokKind::Star)) break;
        first = false;
        Token t = lex.peek();
        TermFactor f;
        if (t.kind == TokKind::Number) {
            lex.next();
            f.kind = FactorKind::Const;
            f.const_base = rational_from_string(t.text);
        } else if (t.kind == TokKind::LParen) {
            // (-1)^(L)
            lex.next();
            lex.expect(TokKind::Minus, "'-' in (-1)^(...) factor");
            Token one = lex.expect(TokKind::Number, "1 in (-1)^(...) factor");
            if (one.text != "1") throw ParseError("only (-1)^(...) sign factors are supported", one.pos);
            lex.expect(TokKind::RParen, "')'");
            lex.expect(TokKind::Caret, "'^'");
            lex.expect(TokKind::LParen, "'('");
            RatFunc arg;
            {
                // reuse the generic expression parser on the balanced chunk
                std::string sub;
                int depth = 1;
                for (;;) {
                    Token a = lex.next();
                    if (a.kind == TokKind::End) throw ParseError("unterminated exponent", a.pos);
                    if (a.kind == TokKind::LParen) ++depth;
                    if (a.kind == TokKind::RParen && --depth == 0) break;
                    sub += a.text;
                    sub += ' ';
                }
                arg = parse_ratfunc_expr(sub);
            }
            f.kind = FactorKind::SignPow;
            f.arg1 = expr_to_poly(arg, t.pos, "sign exponent");
            if (!is_integer_affine(f.arg1))
                throw ParseError("sign exponent must be integer-affine in n,k", t.pos);
        } else if (t.kind == TokKind::Ident) {
            Token id = lex.next();
            lex.expect(TokKind::LParen, "'(' after factor name");
            std::vector<RatFunc> args;
            std::vector<std::string> raw_args;
            {
                std::string sub;
                int depth = 1;
                for (;;) {
                    Token a = lex.next();
                    if (a.kind == TokKind::End) throw ParseError("unterminated argument list", a.pos);
                    if (a.kind == TokKind::LParen) ++depth;
                    if (a.kind == TokKind::RParen && --depth == 0) break;
                    if (a.kind == TokKind::Comma && depth == 1) {
                        raw_args.push_back(sub);
                        sub.clear();
                        continue;
                    }
                    sub += a.text;
                    sub += ' ';
                }
                raw_args.push_back(sub);
            }
            for (auto& s : raw_args) args.push_back(parse_ratfunc_expr(s));

            if (id.text == "binomial") {
                if (args.size() != 2) throw ParseError("binomial takes two arguments", id.pos);
                f.kind = FactorKind::Binomial;
                f.arg1 = expr_to_poly(args[0], id.pos, "binomial argument");
                f.arg2 = expr_to_poly(args[1], id.pos, "binomial argument");
                if (!is_integer_affine(f.arg1) || !is_integer_affine(f.arg2))
                    throw ParseError("binomial arguments must be integer-affine in n,k", id.pos);
                support << (support.tellp() > 0 ? "; " : "") << "binomial(" << f.arg1.str() << "," << f.arg2.str()
                        << ") vanishes unless 0 <= " << f.arg2.str() << " <= " << f.arg1.str();
            } else if (id.text == "factorial") {
                if (args.size() != 1) throw ParseError("factorial takes one argument", id.pos);
                f.kind = FactorKind::Factorial;
                f.arg1 = expr_to_poly(args[0], id.pos, "factorial argument");
                if (!is_integer_affine(f.arg1))
                    throw ParseError("factorial argument must be integer-affine in n,k", id.pos);
            } else if (id.text == "power") {
                if (args.size() != 2) throw ParseError("power takes (base, exponent)", id.pos);
                f.kind = FactorKind::Power;
                const RatFunc& base = args[0];
                if (base.is_constant()) {
                    f.const_base = base.constant_value();
                    if (sumrec::is_zero(f.const_base)) throw ParseError("power base must be nonzero", id.pos);
                } else {
                    MultiPoly bp = expr_to_poly(base, id.pos, "power base");
                    if (bp.term_count() != 1 || bp.leading_monomial().total_degree() != 1 ||
                        !is_one(bp.leading_coefficient()))
                        throw ParseError("power base must be a constant or a parameter symbol", id.pos);
                    f.param_base = bp.leading_monomial().exps[0].first;
                    if (f.param_base == kVarN || f.param_base == kVarK)
                        throw ParseError("power base may not be n or k", id.pos);
                }
                f.arg1 = expr_to_poly(args[1], id.pos, "power exponent");
                if (!is_integer_affine(f.arg1))
                    throw ParseError("power exponent must be integer-affine in n,k", id.pos);
            } else if (id.text == "poly") {
                if (args.size() != 1) throw ParseError("poly takes one argument", id.pos);
                f.kind = FactorKind::Poly;
                f.arg1 = expr_to_poly(args[0], id.pos, "poly argument");
                if (f.arg1.is_zero()) throw ParseError("poly factor must be nonzero", id.pos);
            } else {
                throw ParseError("unsupported factor '" + id.text + "'", id.pos);
            }
        } else {
            throw ParseError("expected a term factor", t.pos);
        }

        if (lex.accept(TokKind::Caret)) {
            Token e = lex.expect(TokKind::Number, "positive integer factor exponent");
            f.exponent = static_cast<int>(std::stol(e.text));
            if (f.exponent <= 0) throw ParseError("factor exponent must be positive", e.pos);
        }

        rn *= factor_shift_quotient(f, kVarN);
        rk *= factor_shift_quotient(f, kVarK);
        h.factors_.push_back(std::move(f));
    }
    if (lex.peek().kind != TokKind::End) throw ParseError("trailing input after term", lex.peek().pos);
    if (h.factors_.empty()) throw ParseError("empty term", 0);
    h.rn_ = rn;
    h.rk_ = rk;
    h.support_note_ = support.str();
    return h;
}

bool HyperTerm::path_independent() const {
    RatFunc lhs = rn_ * rk_.subst_poly(kVarN, MultiPoly::var_plus(kVarN, 1));
    RatFunc rhs = rk_ * rn_.subst_poly(kVarK, MultiPoly::var_plus(kVarK, 1));
    return lhs == rhs;
}

RatFunc HyperTerm::shift_ratio(int i, int j) const {
    if (i < 0 || j < 0) throw std::invalid_argument("shifts must be non-negative");
    RatFunc g(Rational(1));
    for (int t = 0; t < j; ++t) g *= rk_.shifted(kVarK, t);
    RatFunc rn_at_kj = rn_.shifted(kVarK, j);
    for (int s = 0; s < i; ++s) g *= rn_at_kj.shifted(kVarN, s);
    return g;
}

RatFunc HyperTerm::eval(long n0, long k0) const {
    auto affine_at = [&](const MultiPoly& l) {
        return to_long(l.subst_rational(kVarN, Rational(n0)).subst_rational(kVarK, Rational(k0)).constant_value());
    };
    // binomials first: a vanishing binomial puts the point outside the
    // support and short-circuits factors that would otherwise be undefined
    for (auto& f : factors_) {
        if (f.kind != FactorKind::Binomial) continue;
        long a = affine_at(f.arg1), b = affine_at(f.arg2);
        if (b < 0 || a < 0 || b > a) return RatFunc();
    }
    RatFunc prod(Rational(1));
    for (auto& f : factors_) {
        RatFunc v(Rational(1));
        switch (f.kind) {
            case FactorKind::Const:
                v = RatFunc(MultiPoly(f.const_base));
                break;
            case FactorKind::Binomial: {
                long a = affine_at(f.arg1), b = affine_at(f.arg2);
                v = RatFunc(MultiPoly(Rational(binomial_integer(a, b))));
                break;
            }
            case FactorKind::Factorial: {
                long a = affine_at(f.arg1);
                if (a < 0) throw std::domain_error("factorial of negative argument at (n,k)=(" +
                                                   std::to_string(n0) + "," + std::to_string(k0) + ")");
                v = RatFunc(MultiPoly(Rational(factorial_integer(a))));
                break;
            }
            case FactorKind::Power: {
                long e = affine_at(f.arg1);
                if (f.param_base >= 0)
                    v = RatFunc::variable(f.param_base).pow(e);
                else
                    v = RatFunc(MultiPoly(pow_rational(f.const_base, e)));
                break;
            }
            case FactorKind::SignPow: {
                long e = affine_at(f.arg1);
                v = RatFunc(MultiPoly(Rational(((e % 2) + 2) % 2 == 0 ? 1 : -1)));
                break;
            }
            case FactorKind::Poly: {
                MultiPoly p = f.arg1.subst_rational(kVarN, Rational(n0)).subst_rational(kVarK, Rational(k0));
                v = RatFunc(p);
                break;
            }
        }
        prod *= v.pow(f.exponent);
    }
    return prod;
}

std::string HyperTerm::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& f : factors_) {
        if (!first) os << "*";
        first = false;
        switch (f.kind) {
            case FactorKind::Const: os << f.const_base.get_str(); break;
            case FactorKind::Binomial: os << "binomial(" << f.arg1.str() << "," << f.arg2.str() << ")"; break;
            case FactorKind::Factorial: os << "factorial(" << f.arg1.str() << ")"; break;
            case FactorKind::Power:
                os << "power(" << (f.param_base >= 0 ? Symbols::name(f.param_base) : f.const_base.get_str()) << ","
                   << f.arg1.str() << ")";
                break;
            case FactorKind::SignPow: os << "(-1)^(" << f.arg1.str() << ")"; break;
            case FactorKind::Poly: os << "poly(" << f.arg1.str() << ")"; break;
        }
        if (f.exponent != 1) os << "^" << f.exponent;
    }
    return os.str();
}

}  // namespace sumrec
