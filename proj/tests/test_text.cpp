#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "steenq/builtins.hpp"
#include "steenq/text.hpp"

#include "support/random_polys.hpp"

using namespace steenq;

namespace {
const GenList& gens2() { return builtins().bso3.generators; }
const GenList& gens4() { return builtins().p4.generators; }
} // namespace

TEST_CASE("parser accepts the display grammar") {
    REQUIRE(parse_poly("0", gens2()).is_zero());
    REQUIRE(parse_poly("1", gens2()) == PolyGF2::one(2));
    REQUIRE(parse_poly("w2", gens2()) == parse_poly(" w2 ", gens2()));
    REQUIRE(parse_poly("w2*w2", gens2()) == parse_poly("w2^2", gens2()));
    REQUIRE(parse_poly("w2^3*w3 + w3^3", gens2()).terms().size() == 2);
    /* repeated monomials cancel over GF(2) */
    REQUIRE(parse_poly("w2*w3 + w2*w3", gens2()).is_zero());
    REQUIRE(parse_poly("w2 + 0 + w2 + w3", gens2()) == parse_poly("w3", gens2()));
}

TEST_CASE("primed generator names parse unescaped") {
    PolyGF2 p = parse_poly("w2'^3*w2''^2*w3' + w2'*w2''^4*w3'", gens4());
    REQUIRE(p.terms().size() == 2);
    REQUIRE(*degree(p) == 13);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const GenList& gens = (trial % 2) ? gens4() : gens2();
        long long d = 2 + static_cast<long long>(rng() % 14);
        PolyGF2 p = testing::random_homogeneous(rng, gens, d);
        REQUIRE(parse_poly(to_string(p, gens), gens) == p);
    }
    REQUIRE(to_string(PolyGF2::zero(2), gens2()) == "0");
    REQUIRE(to_string(PolyGF2::one(2), gens2()) == "1");
}

TEST_CASE("printing is deterministic") {
    PolyGF2 a = parse_poly("w3^3 + w2^3*w3", gens2());
    PolyGF2 b = parse_poly("w2^3*w3 + w3^3", gens2());
    REQUIRE(to_string(a, gens2()) == to_string(b, gens2()));
}

TEST_CASE("parse errors carry positions") {
    auto pos_of = [](const char* text, const GenList& gens) -> size_t {
        try {
            parse_poly(text, gens);
        } catch (const ParseError& e) {
            return e.position();
        }
        return static_cast<size_t>(-1);
    };
    REQUIRE(pos_of("q7", gens2()) == 0);       /* unknown generator */
    REQUIRE(pos_of("w2^", gens2()) == 3);      /* missing exponent */
    REQUIRE(pos_of("w2 + ", gens2()) == 5);    /* dangling plus */
    REQUIRE(pos_of("w2 w3", gens2()) == 3);    /* missing operator */
    REQUIRE_THROWS_AS(parse_poly("", gens2()), ParseError);
    REQUIRE_THROWS_AS(parse_poly("   ", gens2()), ParseError);
}
