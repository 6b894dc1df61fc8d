#include <doctest.h>

#include <sumrec/exprparse.hpp>
#include <sumrec/ratfunc.hpp>

#include <random>

using namespace sumrec;

namespace {

RatFunc rf(const std::string& s) { return parse_ratfunc_expr(s); }

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-5, 5), pick(0, 2);
    auto rand_poly = [&]() {
        MultiPoly p;
        for (int t = 0; t < 3; ++t) {
            Monomial m;
            int en = pick(rng), ek = pick(rng);
            if (en) m.exps.emplace_back(kVarN, en);
            if (ek) m.exps.emplace_back(kVarK, ek);
            p.add_term(m, Rational(coef(rng)));
        }
        return p;
    };
    MultiPoly den;
    while (den.is_zero()) den = rand_poly();
    return RatFunc(rand_poly(), den);
}

}  // namespace

TEST_SUITE_BEGIN("ratfunc");

TEST_CASE("field arithmetic on spec cases") {
    // 1/n + 1/(n+1) = (2n+1)/(n(n+1))
    RatFunc s = rf("1/n") + rf("1/(n+1)");
    CHECK(s == rf("(2*n+1)/(n^2+n)"));

    // x/x = 1 for nonzero x
    RatFunc x = rf("(n^2-3*k)/(n+5)");
    CHECK(x / x == RatFunc(Rational(1)));

    // (n^2-1)/(n+1) + 0 = n-1 (reduction to lowest terms)
    RatFunc y = RatFunc(parse_ratfunc_expr("n^2-1").num(), parse_ratfunc_expr("n+1").num());
    CHECK((y + RatFunc()) == rf("n-1"));

    CHECK_THROWS_AS(x / RatFunc(), std::domain_error);
}

TEST_CASE("canonical form invariants") {
    RatFunc a = rf("(2*n+2)/(4*n+4)");
    CHECK(a == rf("1/2"));
    RatFunc b = rf("n/(-n^2+1)");  // denominator sign fixed positive-leading
    CHECK(sgn(b.den().leading_coefficient()) > 0);
    CHECK(b == rf("(-n)/(n^2-1)"));
    RatFunc z;
    CHECK(z.is_zero());
    CHECK(z.den().constant_value() == Rational(1));
}

TEST_CASE("field laws on randomized inputs") {
    std::mt19937 rng(2024);
    int done = 0;
    for (int it = 0; it < 700 && done < 500; ++it) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(Rational(1)));
        ++done;
    }
    CHECK(done >= 500);
}

TEST_CASE("normalization idempotence") {
    std::mt19937 rng(99);
    for (int it = 0; it < 50; ++it) {
        RatFunc a = random_ratfunc(rng);
        RatFunc again(a.num(), a.den());
        CHECK(a == again);
    }
}

TEST_CASE("substitution") {
    RatFunc g = rf("(n-k)/(k+1)");
    CHECK(g.subst_rational(kVarN, Rational(5)).subst_rational(kVarK, Rational(2)) == rf("1"));
    CHECK_THROWS_AS(rf("1/(k+1)").subst_rational(kVarK, Rational(-1)), std::domain_error);
    CHECK(g.shifted(kVarK, 1) == rf("(n-k-1)/(k+2)"));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(rf("n+"), ParseError);
    CHECK_THROWS_AS(rf("(n"), ParseError);
    CHECK_THROWS_AS(rf("n^k"), ParseError);
    CHECK_THROWS_AS(rf("foo(3)"), ParseError);
    CHECK_THROWS_AS(rf("1.5"), ParseError);
}

TEST_SUITE_END();
