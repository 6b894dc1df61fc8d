#pragma once

#include <sumrec/ratfunc.hpp>

#include <string>
#include <utility>
#include <vector>

namespace sumrec {

enum class FactorKind { Binomial, Factorial, Power, Poly, SignPow, Const };

struct TermFactor {
    FactorKind kind = FactorKind::Const;
    MultiPoly arg1, arg2;       // binomial(arg1, arg2); factorial/signpow/power exponent arg1; poly arg1
    Rational const_base{1};     // Power base when rational; Const value
    int param_base = -1;        // Power base when a parameter symbol
    int exponent = 1;           // outer integer power of the factor
};

// Doubly hypergeometric term H(n,k): shift quotients are rational functions,
// the parsed factor structure supports exact point evaluation. Binomials use
// natural boundaries: binomial(a,b) = 0 unless 0 <= b <= a.
class HyperTerm {
public:
    // Grammar: product of
    //   binomial(L1,L2) | factorial(L) | power(base,L) | poly(P) | (-1)^(L)
    // each optionally raised to a positive integer power; L are integer-affine
    // in n and k, P is a polynomial, base is a rational constant or parameter.
    // rename maps input identifiers (e.g. the outer variable of a chained sum)
    // onto n and k before interning.
    static HyperTerm parse(const std::string& text,
                           const std::vector<std::pair<std::string, std::string>>& rename = {});

    const RatFunc& ratio_n() const { return rn_; }  // H(n+1,k)/H(n,k)
    const RatFunc& ratio_k() const { return rk_; }  // H(n,k+1)/H(n,k)
    const std::vector<TermFactor>& factors() const { return factors_; }
    const std::string& support_note() const { return support_note_; }

    // Rn(n,k) Rk(n+1,k) == Rk(n,k) Rn(n,k+1): certifies double
    // hypergeometricity independent of the shift path.
    bool path_independent() const;

    // H(n+i,k+j)/H(n,k): j steps of Rk at base n, then i steps of Rn at k+j.
    RatFunc shift_ratio(int i, int j) const;

    // Exact value at integer points; parameters stay symbolic.
    RatFunc eval(long n0, long k0) const;

    std::string str() const;

private:
    std::vector<TermFactor> factors_;
    RatFunc rn_, rk_;
    std::string support_note_;
};

}  // namespace sumrec
