#include <catch2/catch_amalgamated.hpp>

#include "steenq/builtins.hpp"
#include "steenq/series.hpp"

using namespace steenq;

TEST_CASE("geometric series expands to all ones") {
    auto c = expand(parse_series("1/(1-t)"), 10);
    REQUIRE(c == std::vector<long long>(11, 1));
}

TEST_CASE("polynomial numerators expand exactly") {
    auto c = expand(parse_series("(1+t)^2"), 4);
    REQUIRE(c == std::vector<long long>({1, 2, 1, 0, 0}));
    auto d = expand(parse_series("(1-t)(1+t)/(1-t^2)"), 5);
    REQUIRE(d == std::vector<long long>({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("signed expansions are supported") {
    auto c = expand(parse_series("(1-t)/(1-t^2)"), 6); /* equals 1/(1+t) */
    REQUIRE(c == std::vector<long long>({1, -1, 1, -1, 1, -1, 1}));
}

TEST_CASE("the quotient series has the frozen low-degree coefficients") {
    auto c = expand(parse_series("(1-t^5)(1-t^9)/((1-t^2)^2(1-t^3)^2)"), 12);
    REQUIRE(c == std::vector<long long>({1, 0, 2, 2, 3, 3, 7, 4, 9, 8, 11, 9, 16}));
}

TEST_CASE("free and quotient series constructors match the parser") {
    const GenList& gens = builtins().p4.generators;
    auto free_c = expand(free_series(gens), 15);
    auto parsed = expand(parse_series("1/((1-t^2)^2(1-t^3)^2)"), 15);
    REQUIRE(free_c == parsed);
    /* free coefficients count monomials */
    for (long long d = 0; d <= 15; ++d)
        REQUIRE(free_c[static_cast<size_t>(d)] ==
                static_cast<long long>(monomials_of_degree(gens, d).size()));
    auto quot = expand(quotient_series(gens, {5, 9}), 12);
    REQUIRE(quot == expand(parse_series("(1-t^5)(1-t^9)/((1-t^2)^2(1-t^3)^2)"), 12));
}

TEST_CASE("non-integral expansions are rejected") {
    REQUIRE_THROWS_AS(expand(parse_series("1/2"), 3), AlgebraError);
    REQUIRE_THROWS_AS(expand(parse_series("1/t"), 3), AlgebraError); /* den(0) = 0 */
}

TEST_CASE("series parse errors carry positions") {
    REQUIRE_THROWS_AS(parse_series(""), ParseError);
    REQUIRE_THROWS_AS(parse_series("(1-t"), ParseError);
    REQUIRE_THROWS_AS(parse_series("1//2"), ParseError);
    REQUIRE_THROWS_AS(parse_series("t^"), ParseError);
    REQUIRE_THROWS_AS(parse_series("1/(1-t)/(1-t)"), ParseError); /* one division only */
    REQUIRE_THROWS_AS(parse_series("x"), ParseError);
}

TEST_CASE("expansion lengths follow the requested bound") {
    auto c = expand(parse_series("1+t^3"), 0);
    REQUIRE(c == std::vector<long long>({1}));
    REQUIRE_THROWS_AS(expand(parse_series("1"), -1), AlgebraError);
}
