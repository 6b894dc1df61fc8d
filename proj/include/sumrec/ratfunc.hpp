#pragma once

#include <sumrec/multipoly.hpp>

#include <string>

namespace sumrec {

// Reduced quotient of two polynomials. Canonical form: gcd(num, den) is a
// unit, den is integer-primitive with positive leading coefficient (under
// the fixed graded-lex order), zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    explicit RatFunc(MultiPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc variable(int var) { return RatFunc(MultiPoly::variable(var)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc pow(long e) const;
    RatFunc inverse() const;

    // Substitutes var := value; throws if the denominator vanishes.
    RatFunc subst_rational(int var, const Rational& value) const;
    bool denominator_vanishes_at(int var, const Rational& value) const;
    RatFunc subst_poly(int var, const MultiPoly& value) const;
    RatFunc shifted(int var, long offset) const;

    bool contains_var(int var) const { return num_.contains_var(var) || den_.contains_var(var); }

    std::string str() const;

private:
    void reduce();
    MultiPoly num_, den_;
};

}  // namespace sumrec
