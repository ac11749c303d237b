#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "steenq/builtins.hpp"
#include "steenq/milnor.hpp"
#include "steenq/text.hpp"

#include "support/random_polys.hpp"

using namespace steenq;

namespace {
PolyGF2 P2(const char* s) { return parse_poly(s, builtins().bso3.generators); }
} // namespace

TEST_CASE("operation indices are range-checked") {
    REQUIRE_THROWS_AS(check_milnor_index(-1, 12), AlgebraError);
    REQUIRE_THROWS_AS(check_milnor_index(13, 12), BoundError);
    REQUIRE_NOTHROW(check_milnor_index(0, 12));
    MilnorOps ops(builtins().bso3, 3);
    REQUIRE_THROWS_AS(ops.q_derivation(4, P2("w2")), BoundError);
}

TEST_CASE("recursive and derivation evaluations agree on monomials") {
    const AlgebraPresentation& A = builtins().bso3;
    MilnorOps ops(A);
    for (long long d = 0; d <= 20; ++d)
        for (const Monomial& m : monomials_of_degree(A.generators, d)) {
            PolyGF2 p = PolyGF2::from_monomial(m);
            for (int i = 0; i <= 6; ++i)
                REQUIRE(ops.q_derivation(i, p) == q_recursive(A, i, p));
        }
}

TEST_CASE("recursive and derivation evaluations agree on random polynomials") {
    const AlgebraPresentation& A = builtins().p4;
    MilnorOps ops(A);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        long long d = 2 + static_cast<long long>(rng() % 11);
        PolyGF2 p = testing::random_homogeneous(rng, A.generators, d);
        for (int i = 0; i <= 5; ++i)
            REQUIRE(ops.q_derivation(i, p) == q_recursive(A, i, p));
    }
}

TEST_CASE("the operations square to zero and commute") {
    const AlgebraPresentation& A = builtins().bso3;
    MilnorOps ops(A);
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        long long d = 2 + static_cast<long long>(rng() % 10);
        PolyGF2 p = testing::random_homogeneous(rng, A.generators, d);
        for (int m = 0; m <= 4; ++m) {
            REQUIRE(ops.q_derivation(m, ops.q_derivation(m, p)).is_zero());
            for (int n = 0; n <= 4; ++n)
                REQUIRE(ops.q_derivation(m, ops.q_derivation(n, p)) ==
                        ops.q_derivation(n, ops.q_derivation(m, p)));
        }
    }
}

TEST_CASE("the operations are derivations") {
    const AlgebraPresentation& A = builtins().p4;
    MilnorOps ops(A);
    std::mt19937 rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        PolyGF2 p = testing::random_homogeneous(rng, A.generators, 2 + rng() % 8);
        PolyGF2 q = testing::random_homogeneous(rng, A.generators, 2 + rng() % 8);
        for (int m = 0; m <= 4; ++m)
            REQUIRE(ops.q_derivation(m, mul(p, q)) ==
                    add(mul(ops.q_derivation(m, p), q), mul(p, ops.q_derivation(m, q))));
    }
}

TEST_CASE("squares are killed") {
    const AlgebraPresentation& A = builtins().p4;
    MilnorOps ops(A);
    std::mt19937 rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        PolyGF2 p = testing::random_homogeneous(rng, A.generators, 2 + rng() % 8);
        for (int m = 0; m <= 5; ++m) REQUIRE(ops.q_derivation(m, mul(p, p)).is_zero());
    }
}

TEST_CASE("displayed operation values on the two generators") {
    MilnorOps ops(builtins().bso3);
    PolyGF2 w2 = P2("w2"), w3 = P2("w3");
    REQUIRE(ops.q_derivation(0, w2) == P2("w3"));
    REQUIRE(ops.q_derivation(1, w2) == P2("w2*w3"));
    REQUIRE(ops.q_derivation(2, w2) == P2("w2^3*w3 + w3^3"));
    REQUIRE(ops.q_derivation(0, w3).is_zero());
    REQUIRE(ops.q_derivation(1, w3) == P2("w3^2"));
    REQUIRE(ops.q_derivation(3, w3) == P2("w2^6*w3^2 + w3^6"));
}

TEST_CASE("coefficient polynomials match the displayed examples") {
    auto [f31, f30] = f_polys(3);
    REQUIRE(f31 == P2("w2^6 + w3^4"));
    REQUIRE(f30 == P2("w2^4*w3^2"));
    auto [f41, f40] = f_polys(4);
    REQUIRE(f41 == P2("w2^14 + w2^8*w3^4 + w2^2*w3^8"));
    REQUIRE(f40 == P2("w2^12*w3^2 + w3^10"));
    REQUIRE(g_poly(2) == PolyGF2::one(2));
    REQUIRE(g_poly(3) == P2("w2^4"));
    REQUIRE(g_poly(4) == P2("w2^12 + w3^8"));
}

TEST_CASE("coefficient polynomials satisfy the collapse identity at every m") {
    const AlgebraPresentation& A = builtins().bso3;
    MilnorOps ops(A);
    std::mt19937 rng(45);
    for (int m = 2; m <= 6; ++m) {
        auto [f1, f0] = f_polys(m);
        for (int trial = 0; trial < 4; ++trial) {
            PolyGF2 x = testing::random_homogeneous(rng, A.generators, 2 + rng() % 9);
            PolyGF2 want = add(mul(f1, ops.q_derivation(1, x)), mul(f0, ops.q_derivation(0, x)));
            REQUIRE(ops.q_derivation(m, x) == want);
        }
    }
}

TEST_CASE("the vanishing operator kills the rank-2 restriction") {
    const AlgebraPresentation& Z = builtins().bz2xbz2;
    MilnorOps ops(Z);
    std::mt19937 rng(46);
    for (int trial = 0; trial < 10; ++trial) {
        PolyGF2 p = testing::random_homogeneous(rng, Z.generators, 1 + rng() % 12);
        for (int m = 2; m <= 5; ++m)
            REQUIRE(d_operator(ops, builtins().b_iota, m, p).is_zero());
    }
    PolyGF2 s1 = parse_poly("s1", Z.generators);
    REQUIRE_THROWS_AS(d_operator(1, s1), AlgebraError); /* needs m >= 2 */
}

TEST_CASE("generator cache is consistent across instances") {
    MilnorOps a(builtins().bso3), b(builtins().bso3);
    for (int m = 0; m <= 8; ++m) REQUIRE(a.q_generator(m, 0) == b.q_generator(m, 0));
}

TEST_CASE("large indices stay fast via the halving rule") {
    MilnorOps ops(builtins().bso3);
    auto t0 = std::chrono::steady_clock::now();
    PolyGF2 q = ops.q_derivation(10, P2("w2"));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    REQUIRE(!q.is_zero());
    REQUIRE(*degree(q) == 2 + (1ll << 11) - 1);
    REQUIRE(ms < 5000);
}
