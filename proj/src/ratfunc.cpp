#include <sumrec/ratfunc.hpp>

#include <stdexcept>

namespace sumrec {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_constant() || !is_one(g.constant_value())) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    // scale so den is integer-primitive with positive leading coefficient
    Rational c = den_.rational_content();
    if (sgn(den_.leading_coefficient()) < 0) c = -c;
    if (!is_one(c)) {
        den_ = den_.scaled(Rational(1) / c);
        num_ = num_.scaled(Rational(1) / c);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(Rational(1));
    if (is_zero()) {
        if (e < 0) throw std::domain_error("zero rational function raised to negative power");
        return RatFunc();
    }
    unsigned a = static_cast<unsigned>(e < 0 ? -e : e);
    RatFunc base = e < 0 ? inverse() : *this;
    RatFunc r(Rational(1));
    while (a) {
        if (a & 1u) r *= base;
        a >>= 1u;
        if (a) base *= base;
    }
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

bool RatFunc::denominator_vanishes_at(int var, const Rational& value) const {
    return den_.subst_rational(var, value).is_zero();
}

RatFunc RatFunc::subst_rational(int var, const Rational& value) const {
    MultiPoly d = den_.subst_rational(var, value);
    if (d.is_zero()) throw std::domain_error("substitution hits a pole");
    return RatFunc(num_.subst_rational(var, value), std::move(d));
}

RatFunc RatFunc::subst_poly(int var, const MultiPoly& value) const {
    MultiPoly d = den_.subst_poly(var, value);
    if (d.is_zero()) throw std::domain_error("substitution makes denominator vanish");
    return RatFunc(num_.subst_poly(var, value), std::move(d));
}

RatFunc RatFunc::shifted(int var, long offset) const {
    if (offset == 0) return *this;
    return subst_poly(var, MultiPoly::var_plus(var, offset));
}

std::string RatFunc::str() const {
    if (is_polynomial()) {
        Rational d = den_.constant_value();
        if (is_one(d)) return num_.str();
        return "(" + num_.str() + ")/" + d.get_str();
    }
    std::string ns = num_.str();
    std::string ds = den_.str();
    std::string out;
    if (num_.term_count() > 1)
        out = "(" + ns + ")";
    else
        out = ns;
    out += "/";
    if (den_.term_count() > 1)
        out += "(" + ds + ")";
    else
        out += ds;
    return out;
}

}  // namespace sumrec
