#include <doctest.h>

#include <sumrec/rational.hpp>

using namespace sumrec;

TEST_SUITE_BEGIN("rational");

TEST_CASE("canonical form") {
    Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("parsing") {
    CHECK(rational_from_string("22/7") == make_rational(22, 7));
    CHECK(rational_from_string("-15/5") == Rational(-3));
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("pow") {
    CHECK(pow_rational(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(pow_rational(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(pow_rational(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(pow_rational(Rational(0), -1), std::domain_error);
}

TEST_CASE("binomial convention") {
    CHECK(binomial_integer(5, 2) == 10);
    CHECK(binomial_integer(3, 5) == 0);
    CHECK(binomial_integer(-1, 2) == 0);
    CHECK(binomial_integer(4, -1) == 0);
    CHECK(binomial_integer(0, 0) == 1);
}

TEST_CASE("factorial") {
    CHECK(factorial_integer(0) == 1);
    CHECK(factorial_integer(6) == 720);
    CHECK_THROWS_AS(factorial_integer(-2), std::domain_error);
}

TEST_SUITE_END();
