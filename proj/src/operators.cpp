#include <sumrec/operators.hpp>

#include <sumrec/exprparse.hpp>

#include <sstream>
#include <stdexcept>

namespace sumrec {

bool RecOperator::is_zero() const {
    for (auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool RecOperator::has_polynomial_coeffs() const {
    for (auto& c : coeffs)
        if (!c.is_polynomial()) return false;
    return true;
}

std::vector<RatFunc> RecOperator::coeffs_at(long v) const {
    std::vector<RatFunc> out;
    out.reserve(coeffs.size());
    for (auto& c : coeffs) out.push_back(c.subst_rational(shift_var, Rational(v)));
    return out;
}

RecOperator RecOperator::with_argument_shift(long offset) const {
    RecOperator r = *this;
    for (auto& c : r.coeffs) c = c.shifted(shift_var, offset);
    return r;
}

RecOperator RecOperator::subst_param(int var, const Rational& value) const {
    RecOperator r = *this;
    for (auto& c : r.coeffs) c = c.subst_rational(var, value);
    return r;
}

RecOperator operator_normalize(const RecOperator& op, NormalizeNote* note) {
    if (op.is_zero()) throw std::domain_error("cannot normalize the zero operator");
    RecOperator r = op;
    while (!r.coeffs.empty() && r.coeffs.back().is_zero()) r.coeffs.pop_back();

    // clear denominators
    MultiPoly l(Rational(1));
    for (auto& c : r.coeffs)
        if (!c.is_zero()) l = poly_lcm(l, c.den());
    std::vector<MultiPoly> polys;
    polys.reserve(r.coeffs.size());
    for (auto& c : r.coeffs)
        polys.push_back(c.is_zero() ? MultiPoly() : c.num() * poly_divexact(l, c.den()));

    // a vanishing N^0 coefficient means the relation only constrains shifted
    // terms; divide by N and re-anchor the argument
    int shifts = 0;
    while (polys.size() > 1 && polys.front().is_zero()) {
        polys.erase(polys.begin());
        ++shifts;
    }
    if (shifts > 0) {
        MultiPoly back = MultiPoly::var_plus(op.shift_var, -shifts);
        for (auto& p : polys) p = p.subst_poly(op.shift_var, back);
    }
    if (note) note->right_shifts = shifts;

    // collective content
    MultiPoly g;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : poly_gcd(g, p);
        if (g.is_constant() && is_one(g.constant_value())) break;
    }
    if (!g.is_zero() && !(g.is_constant() && is_one(g.constant_value())))
        for (auto& p : polys)
            if (!p.is_zero()) p = poly_divexact(p, g);
    // strip the remaining rational content collectively
    Integer gn(0), gl(1);
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        Rational c = p.rational_content();
        gn = gcd_integer(gn, c.get_num());
        gl = lcm_integer(gl, c.get_den());
    }
    Rational scale(gn, gl);
    scale.canonicalize();
    if (!is_one(scale))
        for (auto& p : polys) p = p.scaled(Rational(1) / scale);

    if (sgn(polys.back().leading_coefficient()) < 0)
        for (auto& p : polys) p = -p;

    RecOperator out;
    out.shift_var = op.shift_var;
    out.coeffs.reserve(polys.size());
    for (auto& p : polys) out.coeffs.emplace_back(RatFunc(std::move(p)));
    return out;
}

bool operator_equal_up_to_unit(const RecOperator& a, const RecOperator& b) {
    RecOperator na = operator_normalize(a), nb = operator_normalize(b);
    if (na.shift_var != nb.shift_var || na.coeffs.size() != nb.coeffs.size()) return false;
    for (std::size_t i = 0; i < na.coeffs.size(); ++i)
        if (!(na.coeffs[i] == nb.coeffs[i])) return false;
    return true;
}

namespace {

std::string coeff_piece(const RatFunc& c, int power, bool leading_position) {
    // renders "+(...)*N^i" / "-(...)*N^i" with the sign pulled out of the
    // coefficient's leading term
    bool negative = false;
    RatFunc a = c;
    if (sgn(c.num().leading_coefficient()) < 0) {
        negative = true;
        a = -c;
    }
    std::ostringstream os;
    os << (negative ? "-" : (leading_position ? "" : "+"));
    std::string body;
    bool trivial = a.is_constant() && is_one(a.constant_value());
    if (a.is_polynomial() && a.num().is_constant()) {
        body = a.num().constant_value().get_str();
        if (power > 0 && trivial) body.clear();
    } else {
        body = "(" + a.str() + ")";
    }
    os << body;
    if (power > 0) {
        if (!body.empty()) os << "*";
        os << "N";
        if (power > 1) os << "^" << power;
    }
    return os.str();
}

}  // namespace

std::string operator_to_string(const RecOperator& op) {
    std::ostringstream os;
    bool first = true;
    for (int i = op.order(); i >= 0; --i) {
        const RatFunc& c = op.coeffs[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        os << coeff_piece(c, i, first);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::string> operator_coeff_strings(const RecOperator& op) {
    std::vector<std::string> out;
    out.reserve(op.coeffs.size());
    for (auto& c : op.coeffs) out.push_back(c.str());
    return out;
}

RecOperator parse_operator(const std::string& text, const std::string& shift_var_name) {
    RatFunc expr = parse_ratfunc_expr(text);
    int nvar = Symbols::intern(shift_var_name);
    int Nvar = Symbols::intern("N");
    if (expr.den().contains_var(Nvar))
        throw ParseError("shift operator N may not appear in a denominator", 0);
    RecOperator op;
    op.shift_var = nvar;
    std::vector<MultiPoly> by_power = expr.num().coefficients_in(Nvar);
    MultiPoly den = expr.den();
    op.coeffs.reserve(by_power.size());
    for (auto& p : by_power) op.coeffs.emplace_back(RatFunc(p, den));
    while (op.coeffs.size() > 1 && op.coeffs.back().is_zero()) op.coeffs.pop_back();
    if (op.is_zero()) throw ParseError("operator has no nonzero coefficient", 0);
    return op;
}

AnnihilationReport operator_annihilates(const RecOperator& op, const std::vector<RatFunc>& values,
                                        long begin, long end) {
    if (begin < 0 || end < begin) throw std::invalid_argument("bad check range");
    if (static_cast<long>(values.size()) < end + op.order() + 1)
        throw std::domain_error("insufficient sequence values for annihilation check");
    AnnihilationReport rep;
    for (long v = begin; v <= end; ++v) {
        bool pole = false;
        for (auto& c : op.coeffs)
            if (c.denominator_vanishes_at(op.shift_var, Rational(v))) {
                pole = true;
                break;
            }
        if (pole) {
            rep.skipped.push_back(v);
            continue;
        }
        RatFunc acc;
        for (int i = 0; i <= op.order(); ++i) {
            const RatFunc& c = op.coeffs[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            acc += c.subst_rational(op.shift_var, Rational(v)) * values[static_cast<std::size_t>(v + i)];
        }
        if (!acc.is_zero()) rep.failures.emplace_back(v, acc.str());
    }
    rep.holds = rep.failures.empty();
    return rep;
}

long operator_valid_from(const RecOperator& op, long scan_to) {
    long n0 = 0;
    const RatFunc& lead = op.leading();
    for (long v = 0; v <= scan_to; ++v) {
        if (lead.denominator_vanishes_at(op.shift_var, Rational(v))) {
            n0 = v + 1;
            continue;
        }
        if (lead.subst_rational(op.shift_var, Rational(v)).is_zero()) n0 = v + 1;
    }
    return n0;
}

}  // namespace sumrec
