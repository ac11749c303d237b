#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "steenq/builtins.hpp"
#include "steenq/quotient.hpp"
#include "steenq/text.hpp"

#include "support/oracles.hpp"

using namespace steenq;

namespace {
const AlgebraPresentation& P4() { return builtins().p4; }
PolyGF2 P(const char* s) { return parse_poly(s, P4().generators); }
} // namespace

TEST_CASE("standard monomials of the known low slices") {
    GroebnerBasis G = buchberger(builtins().n_ring);
    auto slice = standard_monomials(G, 5, 1);
    std::vector<std::string> names;
    for (const Monomial& m : slice) names.push_back(to_string(m, P4().generators));
    std::sort(names.begin(), names.end());
    REQUIRE(names == std::vector<std::string>({"w2''*w3''", "w2'*w3'", "w2'*w3''"}));
    REQUIRE(standard_monomials(G, 7, 1).size() == 4);
    REQUIRE(standard_monomials(G, 0, 0).size() == 1);
    REQUIRE(standard_monomials(G, 1).empty());
}

TEST_CASE("slice dimensions match the brute-force oracle") {
    for (const AlgebraPresentation* A : {&builtins().n_ring, &builtins().m_ring}) {
        GroebnerBasis G = buchberger(*A);
        for (long long d = 0; d <= 14; ++d) {
            REQUIRE(static_cast<long long>(standard_monomials(G, d).size()) ==
                    testing::brute_quotient_dim(A->generators, A->relations, d));
            for (long long w = 0; w <= 4; ++w)
                REQUIRE(static_cast<long long>(standard_monomials(G, d, w).size()) ==
                        testing::brute_quotient_dim(A->generators, A->relations, d, w));
        }
    }
}

TEST_CASE("dimension tables agree with the rational series") {
    GroebnerBasis GN = buchberger(builtins().n_ring);
    PoincareReport rep =
        poincare_check(GN, parse_series("(1-t^5)(1-t^9)/((1-t^2)^2(1-t^3)^2)"), 30);
    REQUIRE(rep.ok);
    PoincareReport bad = poincare_check(GN, parse_series("1/(1-t^2)"), 30);
    REQUIRE(!bad.ok);
    REQUIRE(bad.first_mismatch == 2); /* dim N_2 = 2, series coefficient 1 */
    REQUIRE(bad.expected == 1);
    REQUIRE(bad.got == 2);

    GroebnerBasis GM = buchberger(builtins().m_ring);
    REQUIRE(poincare_check(GM, parse_series("(1-t^5)/((1-t^2)^2(1-t^3)^2)"), 30).ok);
}

TEST_CASE("multiplication by the degree-9 class is injective on M") {
    GroebnerBasis GM = buchberger(builtins().m_ring);
    InjectivityReport rep = mult_injective(GM, P("w3'*w3''^2 + w3''*w3'^2"), 24);
    REQUIRE(rep.injective);
    REQUIRE(rep.degrees_checked == 15); /* degrees 0..15 minus the empty degree-1 slice */
}

TEST_CASE("a zero divisor is reported with a kernel witness") {
    GroebnerBasis GN = buchberger(builtins().n_ring);
    PolyGF2 f = P("w3''");
    InjectivityReport rep = mult_injective(GN, f, 12);
    REQUIRE(!rep.injective);
    REQUIRE(rep.failure_degree == 6);
    REQUIRE(rep.kernel_witness.has_value());
    /* the witness is a genuine nonzero kernel element */
    REQUIRE(!normal_form(GN, *rep.kernel_witness).is_zero());
    REQUIRE(normal_form(GN, mul(f, *rep.kernel_witness)).is_zero());
    REQUIRE(*rep.kernel_witness == P("w3'^2 + w3'*w3''"));
}

TEST_CASE("multiplication by zero is rejected") {
    GroebnerBasis GM = buchberger(builtins().m_ring);
    REQUIRE_THROWS_AS(mult_injective(GM, PolyGF2::zero(4), 10), AlgebraError);
}

TEST_CASE("the weight-preserving embedding of M is injective") {
    GroebnerBasis GM = buchberger(builtins().m_ring);
    InjectivityReport rep = hom_injective(GM, builtins().phi, nullptr, 24);
    REQUIRE(rep.injective);
}

TEST_CASE("a projection with kernel is caught at the first relation degree") {
    /* the identity-on-generators map from the free ring onto M */
    std::vector<std::pair<std::string, std::string>> images;
    for (const GeneratorInfo& g : P4().generators) images.emplace_back(g.name, g.name);
    RingHom quot = make_hom("quot", P4(), builtins().m_ring, images);
    GroebnerBasis free_gb = buchberger(P4());
    GroebnerBasis GM = buchberger(builtins().m_ring);
    InjectivityReport rep = hom_injective(free_gb, quot, &GM, 10);
    REQUIRE(!rep.injective);
    REQUIRE(rep.failure_degree == 5);
    REQUIRE(rep.kernel_witness.has_value());
    REQUIRE(*rep.kernel_witness == builtins().m_ring.relations[0]);
}

TEST_CASE("the two defining relations form a regular sequence") {
    RegularSequenceReport rep = regular_sequence_check(
        P4().generators, builtins().n_ring.relations, 24, MonomialOrder::grevlex(4));
    REQUIRE(rep.ok);
    REQUIRE(rep.series.ok);
}

TEST_CASE("a repeated relation is not a regular sequence") {
    PolyGF2 r5 = builtins().m_ring.relations[0];
    RegularSequenceReport rep =
        regular_sequence_check(P4().generators, {r5, r5}, 16, MonomialOrder::grevlex(4));
    REQUIRE(!rep.ok);
    REQUIRE(rep.failed_stage == 1);
    REQUIRE(rep.injectivity.kernel_witness.has_value());
}

TEST_CASE("degree guards bound the enumeration") {
    GroebnerBasis GN = buchberger(builtins().n_ring);
    REQUIRE_THROWS_AS(standard_monomials(GN, GN.degree_guard() + 1), BoundError);
    REQUIRE_THROWS_AS(dims_by_degree(GN, GN.degree_guard() + 1), BoundError);
}
