#include <doctest.h>

#include "support.hpp"
#include "weylfact/unipoly.hpp"

using weylfact::FactorMultiplicity;
using weylfact::Rational;
using weylfact::RootMultiplicity;
using weylfact::UniPoly;

namespace {

UniPoly P(std::vector<Rational> c) { return UniPoly(std::move(c)); }

UniPoly random_poly(gen::Rng& rng, int max_deg, int cmax) {
    std::vector<Rational> c;
    int deg = rng.uniform(0, max_deg);
    for (int k = 0; k <= deg; ++k) c.emplace_back(rng.uniform(-cmax, cmax));
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial has degree -1") {
    CHECK(UniPoly().degree() == -1);
    CHECK(P({0, 0}).is_zero());
    CHECK(P({1, 2, 0}).degree() == 1);
}

TEST_CASE("division examples") {
    auto [q1, r1] = weylfact::poly_divmod(P({2, -3, 1}), P({-1, 1}));
    CHECK(q1 == P({-2, 1}));
    CHECK(r1.is_zero());

    auto [q2, r2] = weylfact::poly_divmod(P({0, 0, 1}), P({0, 1}));
    CHECK(q2 == P({0, 1}));
    CHECK(r2.is_zero());

    auto [q3, r3] = weylfact::poly_divmod(P({1, 0, 1}), P({-1, 2}));
    CHECK(q3 == P({Rational(1, 4), Rational(1, 2)}));
    CHECK(r3 == P({Rational(5, 4)}));

    CHECK_THROWS_AS(weylfact::poly_divmod(P({1}), UniPoly()), std::domain_error);
}

TEST_CASE("gcd examples") {
    CHECK(weylfact::poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK(weylfact::poly_gcd(P({-1, 1}), P({-2, 1})) == P({1}));
    UniPoly a = UniPoly::from_roots({1, 1, -3});
    UniPoly b = UniPoly::from_roots({1, -3, -3});
    CHECK(weylfact::poly_gcd(a, b) == UniPoly::from_roots({1, -3}));
    CHECK(weylfact::poly_gcd(UniPoly(), P({0, 2})) == P({0, 1}));
}

TEST_CASE("squarefree coprime split examples") {
    auto s1 = weylfact::squarefree_coprime_split(P({2, -3, 1}));
    REQUIRE(s1.size() == 2);
    CHECK(s1[0] == FactorMultiplicity{P({-1, 1}), 1});
    CHECK(s1[1] == FactorMultiplicity{P({-2, 1}), 1});

    auto s2 = weylfact::squarefree_coprime_split(UniPoly::from_roots({1, 1, 1}));
    REQUIRE(s2.size() == 1);
    CHECK(s2[0] == FactorMultiplicity{P({-1, 1}), 3});

    // rational blocks first, then the irreducible quadratic
    auto s3 = weylfact::squarefree_coprime_split(P({1, 0, 1}) * P({-2, 1}));
    REQUIRE(s3.size() == 2);
    CHECK(s3[0] == FactorMultiplicity{P({-2, 1}), 1});
    CHECK(s3[1] == FactorMultiplicity{P({1, 0, 1}), 1});

    CHECK(weylfact::squarefree_coprime_split(P({5})).empty());
}

TEST_CASE("rational roots examples") {
    auto r1 = weylfact::rational_roots(P({2, -3, 1}));
    CHECK(r1 == std::vector<RootMultiplicity>{{1, 1}, {2, 1}});
    CHECK(weylfact::rational_roots(P({1, 0, 1})).empty());
    auto r3 = weylfact::rational_roots(P({-1, 0, 4}));
    CHECK(r3 == std::vector<RootMultiplicity>{{Rational(-1, 2), 1}, {Rational(1, 2), 1}});
    auto r4 = weylfact::rational_roots(P({0, 0, 3}) * UniPoly::from_roots({Rational(2, 3)}));
    CHECK(r4 == std::vector<RootMultiplicity>{{0, 2}, {Rational(2, 3), 1}});
}

TEST_CASE("rational roots with large numerators and denominators") {
    // 1000003 and 999983 are prime; the candidate search has to factor them
    Rational r(1000003, 999983);
    UniPoly s = UniPoly::from_roots({r, Rational(-7, 6)}) * P({1, 0, 1});
    auto roots = weylfact::rational_roots(s * Rational(999983 * 6));
    CHECK(roots == std::vector<RootMultiplicity>{{Rational(-7, 6), 1}, {r, 1}});
}

TEST_CASE("shift and evaluation") {
    UniPoly p = P({1, 2, 3});
    CHECK(p.shifted(1) == P({6, 8, 3}));
    CHECK(p.evaluate(Rational(1, 2)) == Rational(11, 4));
    CHECK(p.derivative() == P({2, 6}));
    CHECK(p.monic() == P({Rational(1, 3), Rational(2, 3), 1}));
}

TEST_CASE("division reconstruction on random pairs") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        UniPoly a = random_poly(rng, 8, 6);
        UniPoly b = random_poly(rng, 8, 6);
        if (b.is_zero()) continue;
        auto [q, r] = weylfact::poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd is symmetric and monic") {
    gen::Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        UniPoly c = random_poly(rng, 2, 3);
        UniPoly a = random_poly(rng, 5, 4) * c;
        UniPoly b = random_poly(rng, 5, 4) * c;
        if (a.is_zero() && b.is_zero()) continue;
        UniPoly g = weylfact::poly_gcd(a, b);
        CHECK(g == weylfact::poly_gcd(b, a));
        CHECK(g.leading() == 1);
        if (!a.is_zero()) CHECK(weylfact::poly_divmod(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(weylfact::poly_divmod(b, g).second.is_zero());
    }
}

TEST_CASE("squarefree split reproduces its input and is pairwise coprime") {
    gen::Rng rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        UniPoly s = UniPoly::constant(rng.nonzero_rational(5, 3));
        int pieces = rng.uniform(1, 4);
        for (int k = 0; k < pieces; ++k) {
            UniPoly f = rng.coin() ? UniPoly::linear_root(rng.nonzero_rational(4, 3)) : random_poly(rng, 2, 3);
            if (f.is_zero()) continue;
            s = s * weylfact::pow(f, static_cast<unsigned>(rng.uniform(1, 3)));
        }
        auto split = weylfact::squarefree_coprime_split(s);
        UniPoly product = UniPoly::constant(s.leading());
        for (const auto& b : split) {
            CHECK(b.factor.leading() == 1);
            product = product * weylfact::pow(b.factor, static_cast<unsigned>(b.multiplicity));
        }
        CHECK(product == s);
        for (std::size_t x = 0; x < split.size(); ++x) {
            for (std::size_t y = x + 1; y < split.size(); ++y) {
                CHECK(weylfact::poly_gcd(split[x].factor, split[y].factor).is_constant());
            }
        }
        for (std::size_t x = 0; x + 1 < split.size(); ++x) {
            CHECK(weylfact::block_order_less(split[x].factor, split[x + 1].factor));
        }
    }
}
