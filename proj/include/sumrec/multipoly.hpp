#pragma once

#include <sumrec/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sumrec {

// Process-wide variable table. Ids are dense and stable; "n" and "k" are
// pre-interned as 0 and 1 so the graded-lex order is fixed across runs.
// Parameters (such as "m") get ids in first-use order.
class Symbols {
public:
    static int intern(const std::string& name);
    static const std::string& name(int id);
    static int lookup(const std::string& name);  // -1 if unknown
};

inline constexpr int kVarN = 0;
inline constexpr int kVarK = 1;

// Sparse exponent vector sorted by variable id; exponents are > 0.
class Monomial {
public:
    std::vector<std::pair<int, int>> exps;

    Monomial() = default;
    explicit Monomial(int var, int exp = 1) {
        if (exp != 0) exps.emplace_back(var, exp);
    }

    bool is_one() const { return exps.empty(); }
    int total_degree() const;
    int exponent(int var) const;
    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;      // this | o
    Monomial divided_into(const Monomial& o) const;  // o / this
    Monomial without(int var) const;

    // Graded lexicographic: total degree first, then lower-id variables are
    // more significant. Returns <0, 0, >0.
    static int compare(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return exps == o.exps; }

    std::string str() const;
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) > 0; }
};

// Sparse multivariate polynomial over Rational. Canonical: no zero
// coefficients stored; term order is the fixed graded-lex order.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (!sumrec::is_zero(c)) terms_[Monomial()] = c;
    }
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}
    static MultiPoly variable(int var, int exp = 1);
    static MultiPoly var_plus(int var, long c);  // var + c, handy for shifts

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rational constant_value() const;  // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const;     // -1 for zero
    int degree(int var) const;    // -1 for zero
    bool contains_var(int var) const;
    std::vector<int> variables() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    void add_term(const Monomial& m, const Rational& c);
    MultiPoly scaled(const Rational& c) const;
    MultiPoly times_monomial(const Monomial& m, const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    // Coefficients of var^j, densely indexed 0..degree(var).
    std::vector<MultiPoly> coefficients_in(int var) const;
    static MultiPoly assemble_in(int var, const std::vector<MultiPoly>& coeffs);

    MultiPoly subst_rational(int var, const Rational& value) const;
    MultiPoly subst_poly(int var, const MultiPoly& value) const;
    MultiPoly shifted(int var, long offset) const { return subst_poly(var, var_plus(var, offset)); }

    // Positive rational c with p/c integer-coprime; sign of leading coeff
    // is preserved in the primitive part. Zero polynomial has content 0.
    Rational rational_content() const;
    MultiPoly primitive_rational() const;

    std::string str() const;

private:
    TermMap terms_;
};

// gcd includes the rational content (gcd(2n, 4n) = 2n); result has positive
// leading coefficient. gcd(0, p) = |p|.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

// Exact quotient; throws std::domain_error if b does not divide a.
MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b);

// p = content * primitive where content = var^min_exp * gcd of the
// coefficients of p viewed in main_var. Throws on zero input.
std::pair<MultiPoly, MultiPoly> poly_content_primitive(const MultiPoly& p, int main_var);

}  // namespace sumrec
