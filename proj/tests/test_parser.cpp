#include <doctest.h>

#include "support.hpp"
#include "weylfact/expr.hpp"

using weylfact::DerivationExpr;
using weylfact::ParseError;
using weylfact::Rational;
using K = weylfact::DerivationExpr::Kind;

namespace {

DerivationExpr sym(K k) { return DerivationExpr::symbol(k); }
DerivationExpr num(long v) { return DerivationExpr::number(Rational(v)); }
DerivationExpr bin(K k, DerivationExpr a, DerivationExpr b) { return DerivationExpr::binary(k, std::move(a), std::move(b)); }

DerivationExpr random_tree(gen::Rng& rng, int depth) {
    int pick = rng.uniform(0, depth <= 0 ? 3 : 8);
    switch (pick) {
        case 0:
            return DerivationExpr::number(Rational(rng.uniform(0, 12), rng.uniform(1, 4)));
        case 1:
            return sym(K::T);
        case 2:
            return sym(K::D);
        case 3:
            return sym(K::E);
        case 4:
            return bin(K::Add, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 5:
            return bin(K::Sub, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 6:
            return bin(K::Mul, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 7:
            return DerivationExpr::power(random_tree(rng, depth - 1), static_cast<unsigned>(rng.uniform(0, 3)));
        default:
            return DerivationExpr::negate(random_tree(rng, depth - 1));
    }
}

std::set<std::string> expected_at(const char* text, std::size_t* offset) {
    try {
        weylfact::parse_operator(text);
    } catch (const ParseError& e) {
        *offset = e.offset();
        return e.expected();
    }
    FAIL("no parse error for " << text);
    return {};
}

}  // namespace

TEST_CASE("parse trees keep the written order") {
    auto e = weylfact::parse_operator("E*t");
    CHECK(e == bin(K::Mul, sym(K::E), sym(K::T)));
    CHECK(weylfact::parse_operator("t^2*D^2") ==
          bin(K::Mul, DerivationExpr::power(sym(K::T), 2), DerivationExpr::power(sym(K::D), 2)));
    CHECK(weylfact::parse_operator(" 1 - 2 - 3 ") == bin(K::Sub, bin(K::Sub, num(1), num(2)), num(3)));
    CHECK(weylfact::parse_operator("-t*E") == DerivationExpr::negate(bin(K::Mul, sym(K::T), sym(K::E))));
    CHECK(weylfact::parse_operator("3/6").value == Rational(1, 2));
}

TEST_CASE("slope-one example parses to the expected operator") {
    auto l = weylfact::from_derivation_form(weylfact::parse_operator("t*E^2 - 3*t*E + 2 + t^2*E"), 8);
    weylfact::CoeffMap expected{{{2, 1}, Rational(1)}, {{1, 1}, Rational(-3)}, {{0, 0}, Rational(2)}, {{1, 2}, Rational(1)}};
    CHECK(l.terms() == expected);
    auto et = weylfact::from_derivation_form(weylfact::parse_operator("E*t"), 8);
    CHECK(et.terms() == weylfact::CoeffMap{{{1, 0}, Rational(1)}, {{0, 0}, Rational(1)}});
    CHECK(et.t_shift() == -1);
}

TEST_CASE("syntax errors carry offset and expected tokens") {
    std::size_t offset = 0;
    auto exp = expected_at("t + * E", &offset);
    CHECK(offset == 4);
    CHECK(exp.count("'t'") == 1);
    CHECK(exp.count("number") == 1);
    CHECK(exp.count("'('") == 1);

    exp = expected_at("(t + E", &offset);
    CHECK(offset == 6);
    CHECK(exp.count("')'") == 1);

    exp = expected_at("t^x", &offset);
    CHECK(offset == 2);
    CHECK(exp == std::set<std::string>{"unsigned integer"});

    exp = expected_at("2/0", &offset);
    CHECK(offset == 2);

    exp = expected_at("t E", &offset);
    CHECK(offset == 2);
    CHECK(exp.count("end of input") == 1);

    exp = expected_at("", &offset);
    CHECK(offset == 0);
    CHECK_THROWS_AS(weylfact::parse_operator("x"), ParseError);
    CHECK_THROWS_AS(weylfact::parse_operator("t^99999"), ParseError);
}

TEST_CASE("printer examples") {
    CHECK(weylfact::print_expr(weylfact::parse_operator("(t)*((E))")) == "t*E");
    CHECK(weylfact::print_expr(weylfact::parse_operator("t*(E*D)")) == "t*(E*D)");
}

TEST_CASE("parse then print is a fixed point") {
    gen::Rng rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        auto tree = random_tree(rng, 4);
        std::string once = weylfact::print_expr(tree);
        auto parsed = weylfact::parse_operator(once);
        CHECK(parsed == tree);
        CHECK(weylfact::print_expr(parsed) == once);
    }
}

TEST_CASE("canonical operator text reparses to the same operator") {
    gen::Rng rng(62);
    for (int trial = 0; trial < 300; ++trial) {
        weylfact::CoeffMap m = gen::random_canonical(rng, 4, 6, 8, 5);
        if (rng.coin()) weylfact::accumulate(m, {1, 2}, Rational(rng.uniform(-9, 9), rng.uniform(1, 5)));
        weylfact::WeylOperator l(m, 10);
        auto again = weylfact::from_derivation_form(weylfact::parse_operator(weylfact::print_operator(l)), 10);
        CHECK(again == l);
    }
    CHECK(weylfact::print_operator(weylfact::CoeffMap{}) == "0");
    CHECK(weylfact::print_operator(weylfact::CoeffMap{{{2, 2}, Rational(1)}, {{1, 2}, Rational(1)},
                                                      {{1, 1}, Rational(-3)}, {{0, 0}, Rational(2)}}) ==
          "t^2*E^2 + t^2*E - 3*t*E + 2");
    CHECK(weylfact::print_operator(weylfact::CoeffMap{{{1, 0}, Rational(-1, 2)}}) == "-1/2*E");
}

TEST_CASE("polynomials in l") {
    CHECK(weylfact::parse_polynomial("l^2 - 3*l + 2") == weylfact::UniPoly::from_roots({1, 2}));
    CHECK(weylfact::parse_polynomial("(l+1)*(l-1)") == weylfact::UniPoly({-1, 0, 1}));
    CHECK_THROWS_AS(weylfact::parse_polynomial("t"), ParseError);
}
