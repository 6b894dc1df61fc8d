#include <doctest.h>

#include <sumrec/operators.hpp>

#include <random>

using namespace sumrec;

TEST_SUITE_BEGIN("operators");

TEST_CASE("normalize sign convention") {
    RecOperator op = parse_operator("-N^2+3*N-1");
    RecOperator norm = operator_normalize(op);
    auto cs = operator_coeff_strings(norm);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == "1");
    CHECK(cs[1] == "-3");
    CHECK(cs[2] == "1");
    CHECK(operator_to_string(norm) == "N^2-3*N+1");
}

TEST_CASE("normalize clears denominators of the quoted trinomial form") {
    RecOperator op = parse_operator("N^2-((2*n-1)/n)*N-((3*n-3)/n)");
    RecOperator norm = operator_normalize(op);
    auto cs = operator_coeff_strings(norm);
    REQUIRE(cs.size() == 3);
    // (3n-3, 2n-1, -n) up to overall sign; leading term positive fixes the sign
    CHECK(cs[0] == "-3*n+3");
    CHECK(cs[1] == "-2*n+1");
    CHECK(cs[2] == "n");
}

TEST_CASE("normalize right-shifts trailing zero coefficient") {
    RecOperator op;
    op.shift_var = kVarN;
    op.coeffs = {RatFunc(0L), RatFunc(2L), RatFunc(4L)};
    NormalizeNote note;
    RecOperator norm = operator_normalize(op, &note);
    CHECK(note.right_shifts == 1);
    auto cs = operator_coeff_strings(norm);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == "1");
    CHECK(cs[1] == "2");
}

TEST_CASE("normalize idempotence and unit equality") {
    RecOperator a = parse_operator("(2*n+2)*N^2-(4*n+4)");
    RecOperator na = operator_normalize(a);
    CHECK(operator_equal_up_to_unit(na, operator_normalize(na)));
    CHECK(operator_equal_up_to_unit(a, parse_operator("(-n-1)*N^2+(2*n+2)")));
    CHECK(operator_equal_up_to_unit(a, parse_operator("N^2-2")));  // common factor (2n+2) is content
    CHECK(!operator_equal_up_to_unit(a, parse_operator("N^2-3")));
    CHECK_THROWS_AS(operator_normalize(RecOperator{kVarN, {RatFunc()}}), std::domain_error);
}

TEST_CASE("annihilation check") {
    std::vector<RatFunc> x;
    for (long v = 1; v <= 16; v *= 2) x.emplace_back(Rational(v));  // 1,2,4,8,16
    RecOperator op = parse_operator("N-2");
    auto rep = operator_annihilates(op, x, 0, 3);
    CHECK(rep.holds);
    CHECK(rep.failures.empty());

    RecOperator bad = parse_operator("N-3");
    std::vector<RatFunc> y{RatFunc(1L), RatFunc(2L), RatFunc(4L), RatFunc(8L)};
    auto rep2 = operator_annihilates(bad, y, 0, 2);
    CHECK(!rep2.holds);
    REQUIRE(!rep2.failures.empty());
    CHECK(rep2.failures[0].first == 0);
    CHECK(rep2.failures[0].second == "-1");

    CHECK_THROWS_AS(operator_annihilates(op, y, 0, 9), std::domain_error);
}

TEST_CASE("poles in coefficients are skipped, not failed") {
    RecOperator op = parse_operator("N-(1/(n-2))");
    std::vector<RatFunc> x(6, RatFunc(Rational(0)));
    auto rep = operator_annihilates(op, x, 0, 4);
    CHECK(rep.holds);
    REQUIRE(rep.skipped.size() == 1);
    CHECK(rep.skipped[0] == 2);
}

TEST_CASE("print/parse round trip on random operators") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coef(-9, 9), deg(0, 3), ord(1, 4);
    for (int it = 0; it < 120; ++it) {
        RecOperator op;
        op.shift_var = kVarN;
        int I = ord(rng);
        op.coeffs.resize(static_cast<std::size_t>(I + 1));
        for (auto& c : op.coeffs) {
            MultiPoly p;
            for (int t = 0; t < 2; ++t) p.add_term(Monomial(kVarN, deg(rng)), Rational(coef(rng)));
            c = RatFunc(p);
        }
        if (op.is_zero()) continue;
        RecOperator norm = operator_normalize(op);
        RecOperator reparsed = parse_operator(operator_to_string(norm));
        CHECK(operator_equal_up_to_unit(norm, reparsed));
        // strict equality of the normalized forms, not just up-to-unit
        auto a = operator_coeff_strings(norm), b = operator_coeff_strings(operator_normalize(reparsed));
        CHECK(a == b);
    }
}

TEST_CASE("normalization preserves annihilation") {
    // operator with rational coefficients annihilating x_n = n!
    // (x_{n+1} = (n+1) x_n), written with a denominator
    RecOperator op = parse_operator("N/(n+1)-1");
    std::vector<RatFunc> fact;
    Rational f(1);
    for (long v = 0; v <= 8; ++v) {
        fact.emplace_back(f);
        f *= Rational(v + 1);
    }
    CHECK(operator_annihilates(op, fact, 0, 6).holds);
    RecOperator norm = operator_normalize(op);
    CHECK(operator_annihilates(norm, fact, 0, 6).holds);
}

TEST_CASE("valid-from threshold scans integer roots of the leading coefficient") {
    RecOperator op = parse_operator("(n-3)*N-1");
    CHECK(operator_valid_from(op, 20) == 4);
    CHECK(operator_valid_from(parse_operator("N-2"), 20) == 0);
}

TEST_SUITE_END();
