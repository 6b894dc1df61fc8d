#include <doctest.h>

#include <sumrec/multipoly.hpp>

#include <random>

using namespace sumrec;

namespace {

MultiPoly nvar() { return MultiPoly::variable(kVarN); }
MultiPoly kvar() { return MultiPoly::variable(kVarK); }

MultiPoly random_poly(std::mt19937& rng, int vars, int max_deg, int terms) {
    std::uniform_int_distribution<int> coef(-6, 6), deg(0, max_deg);
    MultiPoly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 0; v < vars; ++v) {
            int e = deg(rng);
            if (e > 0) m.exps.emplace_back(v, e);
        }
        p.add_term(m, Rational(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("multipoly");

TEST_CASE("grlex order and printing") {
    MultiPoly p = nvar() * nvar() + nvar() * kvar().scaled(Rational(3)) - MultiPoly(2L);
    CHECK(p.str() == "n^2+3*n*k-2");
    CHECK(p.total_degree() == 2);
    CHECK(p.degree(kVarK) == 1);
}

TEST_CASE("arithmetic basics") {
    MultiPoly a = MultiPoly::var_plus(kVarN, 1);       // n+1
    MultiPoly b = MultiPoly::var_plus(kVarN, -1);      // n-1
    CHECK((a * b).str() == "n^2-1");
    CHECK((a + b).str() == "2*n");
    CHECK((a - a).is_zero());
    CHECK(a.pow(3).str() == "n^3+3*n^2+3*n+1");
}

TEST_CASE("substitution and shift") {
    MultiPoly p = nvar() * nvar() + kvar();  // n^2 + k
    CHECK(p.subst_rational(kVarN, Rational(3)).str() == "k+9");
    CHECK(p.shifted(kVarN, 1).str() == "n^2+2*n+k+1");
    CHECK(p.shifted(kVarN, 1).shifted(kVarN, -1) == p);
}

TEST_CASE("content and primitive per main variable") {
    // 2nk + 4n = 2n * (k + 2)
    MultiPoly p = nvar() * kvar().scaled(Rational(2)) + nvar().scaled(Rational(4));
    auto [cont, prim] = poly_content_primitive(p, kVarK);
    CHECK(cont.str() == "2*n");
    CHECK(prim.str() == "k+2");
    CHECK(cont * prim == p);

    MultiPoly q = kvar() * kvar() + MultiPoly(1L);
    auto [cq, pq] = poly_content_primitive(q, kVarK);
    CHECK(cq.str() == "1");
    CHECK(pq == q);

    // 6k^2 + 9k = 3k * (2k + 3)
    MultiPoly r = kvar() * kvar().scaled(Rational(6)) + kvar().scaled(Rational(9));
    auto [cr, pr] = poly_content_primitive(r, kVarK);
    CHECK(cr.str() == "3*k");
    CHECK(pr.str() == "2*k+3");

    CHECK_THROWS_AS(poly_content_primitive(MultiPoly(), kVarK), std::domain_error);
}

TEST_CASE("gcd includes rational content") {
    MultiPoly a = nvar().scaled(Rational(2));
    MultiPoly b = nvar().scaled(Rational(4));
    CHECK(poly_gcd(a, b).str() == "2*n");

    MultiPoly p = MultiPoly::var_plus(kVarN, 1).pow(2) * MultiPoly::var_plus(kVarK, 3);
    MultiPoly q = MultiPoly::var_plus(kVarN, 1) * MultiPoly::var_plus(kVarK, -2);
    CHECK(poly_gcd(p, q).str() == "n+1");
}

TEST_CASE("gcd randomized: g divides both and common factors are found") {
    std::mt19937 rng(42);
    for (int it = 0; it < 40; ++it) {
        MultiPoly f = random_poly(rng, 2, 2, 3);
        MultiPoly g = random_poly(rng, 2, 2, 3);
        MultiPoly h = random_poly(rng, 2, 1, 2);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        MultiPoly d = poly_gcd(f * h, g * h);
        // h divides the gcd
        CHECK_NOTHROW(poly_divexact(d, poly_gcd(d, h)));
        CHECK_NOTHROW(poly_divexact(f * h, d));
        CHECK_NOTHROW(poly_divexact(g * h, d));
    }
}

TEST_CASE("divexact round trip") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        MultiPoly f = random_poly(rng, 2, 3, 4);
        MultiPoly g = random_poly(rng, 2, 2, 3);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(poly_divexact(f * g, g) == f);
    }
    CHECK_THROWS_AS(poly_divexact(MultiPoly::var_plus(kVarN, 1), MultiPoly::variable(kVarK)), std::domain_error);
}

TEST_CASE("lcm") {
    MultiPoly a = MultiPoly::var_plus(kVarN, 1) * MultiPoly::var_plus(kVarN, 2);
    MultiPoly b = MultiPoly::var_plus(kVarN, 2) * MultiPoly::var_plus(kVarN, 3);
    MultiPoly l = poly_lcm(a, b);
    CHECK_NOTHROW(poly_divexact(l, a));
    CHECK_NOTHROW(poly_divexact(l, b));
    CHECK(l.degree(kVarN) == 3);
}

TEST_SUITE_END();
