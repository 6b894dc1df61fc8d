#include <doctest.h>

#include <sumrec/exprparse.hpp>
#include <sumrec/linalg.hpp>

#include <random>

using namespace sumrec;

namespace {

RatFunc rf(const std::string& s) { return parse_ratfunc_expr(s); }

bool all_zero(const std::vector<RatFunc>& v) {
    for (auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rank-1 2x2") {
    RatMatrix m(2, 2);
    m.at(0, 0) = rf("1");
    m.at(0, 1) = rf("1");
    m.at(1, 0) = rf("2");
    m.at(1, 1) = rf("2");
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(all_zero(apply_matrix(m, basis[0])));
    // normalized: (1, -1)
    CHECK(basis[0][0] == rf("1"));
    CHECK(basis[0][1] == rf("-1"));
}

TEST_CASE("identity has empty nullspace") {
    RatMatrix m(2, 2);
    m.at(0, 0) = rf("1");
    m.at(1, 1) = rf("1");
    CHECK(nullspace(m).empty());
}

TEST_CASE("symbolic example normalizes denominators away") {
    // [[n, n^2, 1], [0, 0, 1]] -> basis {(n, -1, 0)}
    RatMatrix m(2, 3);
    m.at(0, 0) = rf("n");
    m.at(0, 1) = rf("n^2");
    m.at(0, 2) = rf("1");
    m.at(1, 2) = rf("1");
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(all_zero(apply_matrix(m, basis[0])));
    CHECK(basis[0][0] == rf("n"));
    CHECK(basis[0][1] == rf("-1"));
    CHECK(basis[0][2].is_zero());
}

TEST_CASE("zero matrix yields the full standard basis") {
    RatMatrix m(2, 3);
    auto basis = nullspace(m);
    CHECK(basis.size() == 3);
}

TEST_CASE("soundness and completeness on random rational-entry matrices") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> dim(1, 5), coef(-4, 4);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
        RatMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = RatFunc(Rational(coef(rng)));
        auto basis = nullspace(m);
        for (auto& v : basis) CHECK(all_zero(apply_matrix(m, v)));
        // numeric rank cross-check by exact elimination over the rationals
        std::vector<std::vector<Rational>> a(r, std::vector<Rational>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a[i][j] = m.at(i, j).is_zero() ? Rational(0) : m.at(i, j).constant_value();
        std::size_t rank = 0;
        for (std::size_t col = 0; col < c && rank < r; ++col) {
            std::size_t piv = rank;
            while (piv < r && sumrec::is_zero(a[piv][col])) ++piv;
            if (piv == r) continue;
            std::swap(a[rank], a[piv]);
            for (std::size_t i = rank + 1; i < r; ++i) {
                if (sumrec::is_zero(a[i][col])) continue;
                Rational f = a[i][col] / a[rank][col];
                for (std::size_t j = col; j < c; ++j) a[i][j] -= f * a[rank][j];
            }
            ++rank;
        }
        CHECK(rank + basis.size() == c);
    }
}

TEST_CASE("polynomial-entry matrices with symbolic pivots") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
    for (int it = 0; it < 25; ++it) {
        RatMatrix m(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                MultiPoly p;
                for (int t = 0; t < 2; ++t) p.add_term(Monomial(kVarN, deg(rng)), Rational(coef(rng)));
                m.at(i, j) = RatFunc(p);
            }
        auto basis = nullspace(m);
        CHECK(!basis.empty());  // 3x4 always has a kernel vector
        for (auto& v : basis) {
            CHECK(all_zero(apply_matrix(m, v)));
            // denominators cleared, no common polynomial factor
            MultiPoly g;
            for (auto& e : v) {
                CHECK(e.is_polynomial());
                if (!e.is_zero()) g = g.is_zero() ? e.num() : poly_gcd(g, e.num());
            }
            if (!g.is_zero()) CHECK(g.is_constant());
        }
    }
}

TEST_SUITE_END();
