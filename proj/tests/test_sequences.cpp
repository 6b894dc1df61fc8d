#include <doctest.h>

#include <sumrec/oracle.hpp>
#include <sumrec/sequences.hpp>

#include <random>

using namespace sumrec;

namespace {

std::vector<long> to_longs(const std::vector<RatFunc>& v) {
    std::vector<long> out;
    for (auto& e : v) out.push_back(e.is_zero() ? 0 : to_long(e.constant_value()));
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("sequences");

TEST_CASE("fibonacci unrolls") {
    HoloSeq fib = fibonacci_seq();
    CHECK(to_longs(fib.eval(6)) == std::vector<long>{0, 1, 1, 2, 3, 5, 8});
}

TEST_CASE("constant sequence is a fixed point") {
    CHECK(to_longs(constant_one_seq().eval(3)) == std::vector<long>{1, 1, 1, 1});
}

TEST_CASE("central trinomial matches the expansion oracle") {
    HoloSeq tri = central_trinomial_seq();
    auto vals = to_longs(tri.eval(5));
    CHECK(vals == std::vector<long>{1, 1, 3, 7, 19, 51});
    auto oracle = trinomial_central(24);
    auto seq = tri.eval(24);
    for (std::size_t i = 0; i < oracle.size(); ++i)
        CHECK(seq[i].constant_value() == Rational(oracle[i]));
}

TEST_CASE("prefix consistency of memoized evaluation") {
    HoloSeq tri = central_trinomial_seq();
    auto a = tri.eval(10);
    auto b = tri.eval(20);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("singular recurrence raises with the offending index") {
    // leading coefficient (k-2) vanishes when stepping from base index 2
    RecOperator rec = parse_operator("(k-2)*N^2-N-1", "k");
    HoloSeq s(rec, {RatFunc(1L), RatFunc(1L)}, "singular");
    CHECK_NOTHROW(s.eval(3));
    CHECK_THROWS_WITH_AS(s.eval(4), doctest::Contains("index 2"), std::domain_error);
}

TEST_CASE("m-fibonacci stays symbolic and instantiates to fibonacci") {
    HoloSeq mf = m_fibonacci_seq();
    auto vals = mf.eval(6);
    int m = Symbols::lookup("m");
    REQUIRE(m >= 0);
    HoloSeq fib = fibonacci_seq();
    auto fvals = fib.eval(6);
    for (std::size_t i = 0; i < vals.size(); ++i)
        CHECK(vals[i].subst_rational(m, Rational(1)) == fvals[i]);
    // a_2 = m, a_3 = m^2 + 1
    CHECK(vals[2] == RatFunc::variable(m));
    CHECK(vals[3] == RatFunc::variable(m) * RatFunc::variable(m) + RatFunc(1L));
}

TEST_CASE("shift_reduce identities for fibonacci") {
    HoloSeq fib = fibonacci_seq();
    auto c = shift_reduce(fib.rec(), 3);
    CHECK(c[2][0] == RatFunc(1L));
    CHECK(c[2][1] == RatFunc(1L));
    CHECK(c[3][0] == RatFunc(1L));
    CHECK(c[3][1] == RatFunc(2L));
}

TEST_CASE("shift_reduce pointwise identity at 20 base points") {
    std::vector<HoloSeq> seqs;
    seqs.push_back(fibonacci_seq());
    seqs.push_back(central_trinomial_seq());
    seqs.push_back(m_fibonacci_seq());
    for (auto& s : seqs) {
        const int D = s.order();
        const int J = 5;
        auto c = shift_reduce(s.rec(), J);
        auto vals = s.eval(J + 25);
        for (int j = 0; j <= J; ++j) {
            for (long k0 = 0; k0 < 20; ++k0) {
                RatFunc acc;
                bool defined = true;
                for (int m = 0; m < D; ++m) {
                    const RatFunc& cf = c[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
                    if (cf.is_zero()) continue;
                    if (cf.denominator_vanishes_at(s.rec().shift_var, Rational(k0))) {
                        defined = false;
                        break;
                    }
                    acc += cf.subst_rational(s.rec().shift_var, Rational(k0)) * vals[static_cast<std::size_t>(k0 + m)];
                }
                if (!defined) continue;
                CHECK(acc == vals[static_cast<std::size_t>(k0 + j)]);
            }
        }
    }
}

TEST_CASE("shift_reduce denominators divide shifted leading coefficients") {
    HoloSeq tri = central_trinomial_seq();
    const int J = 6;
    auto c = shift_reduce(tri.rec(), J);
    const int D = tri.order();
    for (int j = D; j <= J; ++j) {
        MultiPoly prod(Rational(1));
        for (int t = 0; t <= j - D; ++t)
            prod = prod * tri.rec().leading().num().shifted(kVarK, t);
        for (int m = 0; m < D; ++m) {
            if (c[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)].is_zero()) continue;
            CHECK_NOTHROW(poly_divexact(prod, c[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)].den()));
        }
    }
}

TEST_SUITE_END();
