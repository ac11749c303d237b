#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "steenq/verifier.hpp"

using namespace steenq;

namespace {
const std::vector<std::string> kRegistryOrder = {
    "WuTable",         "Prop2.2",       "Lemma2.1",     "d3-identity",  "d5-identity",
    "d9-identity",     "d17-identity",  "Prop3.1",      "Remark3.3",    "Remark3.4",
    "RegularSequence", "PhiBarInjective", "MInjectivity", "Prop3.2",      "QClosureN",
    "Thm1.4",          "NegativeControl"};
} // namespace

TEST_CASE("the full claim registry passes with default bounds") {
    Verifier v;
    std::vector<ClaimResult> results = v.run_all();
    REQUIRE(results.size() == kRegistryOrder.size());
    for (size_t i = 0; i < results.size(); ++i) {
        INFO(results[i].id << ": " << results[i].witness);
        REQUIRE(results[i].id == kRegistryOrder[i]);
        REQUIRE(results[i].status == ClaimStatus::Pass);
        REQUIRE(!results[i].witness.empty());
        REQUIRE(!results[i].quote.empty());
    }
    REQUIRE(exit_code_for(results) == 0);

    SECTION("the JSON report carries every field of every claim") {
        nlohmann::json rep = nlohmann::json::parse(report_json(results));
        REQUIRE(rep.contains("claims"));
        REQUIRE(rep["claims"].size() == results.size());
        for (size_t i = 0; i < results.size(); ++i) {
            const auto& c = rep["claims"][i];
            REQUIRE(c["id"] == results[i].id);
            REQUIRE(c["paper_ref"].is_string());
            REQUIRE(c["quote"].is_string());
            REQUIRE(c["params"].is_string());
            REQUIRE(c["status"] == "pass");
            REQUIRE(c["witness"].is_string());
            REQUIRE(c["ms"].is_number());
        }
    }
}

TEST_CASE("tightened bounds still verify every claim") {
    VerifyConfig cfg;
    cfg.max_degree = 10;
    cfg.max_m = 3;
    Verifier v(cfg);
    std::vector<ClaimResult> results = v.run_all();
    for (const ClaimResult& r : results) {
        INFO(r.id << ": " << r.witness);
        REQUIRE(r.status == ClaimStatus::Pass);
    }
    REQUIRE(exit_code_for(results) == 0);
}

TEST_CASE("empty bounds skip every claim with a warning") {
    VerifyConfig cfg;
    cfg.max_degree = 0;
    Verifier v(cfg);
    std::vector<ClaimResult> results = v.run_all();
    REQUIRE(results.size() == kRegistryOrder.size());
    for (const ClaimResult& r : results) {
        REQUIRE(r.status == ClaimStatus::Skip);
        REQUIRE(r.witness.rfind("skipped-with-warning:", 0) == 0);
    }
    REQUIRE(exit_code_for(results) == 3);
}

TEST_CASE("a degree bound past the basis guard degrades to skips, not failures") {
    VerifyConfig cfg;
    cfg.max_degree = 70; /* just past the default rewriting guard */
    Verifier v(cfg);
    std::vector<ClaimResult> results = v.verify_bases_and_series();
    REQUIRE(results.size() == 6);
    for (const ClaimResult& r : results) {
        INFO(r.id << ": " << r.witness);
        REQUIRE(r.status == ClaimStatus::Skip);
        REQUIRE(r.witness.rfind("skipped-with-warning:", 0) == 0);
    }
    REQUIRE(exit_code_for(results) == 3);
}

TEST_CASE("exit codes rank fail over skip over pass") {
    ClaimResult pass, fail, skip;
    pass.status = ClaimStatus::Pass;
    fail.status = ClaimStatus::Fail;
    skip.status = ClaimStatus::Skip;
    REQUIRE(exit_code_for({}) == 0);
    REQUIRE(exit_code_for({pass, pass}) == 0);
    REQUIRE(exit_code_for({pass, skip}) == 3);
    REQUIRE(exit_code_for({skip, fail, pass}) == 1);
}

TEST_CASE("a corrupted operation table fails the table claim") {
    Builtins bad = with_bso3(
        builtins(), with_sq_entry(builtins().bso3, 0, 1, PolyGF2::zero(2)));
    Verifier v({}, bad);
    ClaimResult r = v.verify_wu_table();
    REQUIRE(r.status == ClaimStatus::Fail);
    REQUIRE(r.witness.find("Sq^1 w2") != std::string::npos);
}

TEST_CASE("a dropped relation fails the series claims") {
    Builtins bad = builtins();
    bad.n_ring = without_relation(bad.n_ring, 1);
    Verifier v({}, bad);
    std::vector<ClaimResult> results = v.verify_bases_and_series();
    REQUIRE(exit_code_for(results) == 1);
    bool series_failed = false;
    for (const ClaimResult& r : results)
        if (r.id == "Remark3.4") series_failed = (r.status == ClaimStatus::Fail);
    REQUIRE(series_failed);
}

TEST_CASE("the negative control rejects an engine that misses corruption") {
    /* sanity check on the control itself: with honest builtins it passes */
    Verifier v;
    ClaimResult r = v.verify_negative_control();
    REQUIRE(r.status == ClaimStatus::Pass);
    REQUIRE(r.witness.find("corruption detected") != std::string::npos);
}

TEST_CASE("every single-site corruption of the builtins is detected") {
    std::vector<MutationOutcome> sweep = mutation_sweep();
    REQUIRE(sweep.size() >= 60);
    for (const MutationOutcome& m : sweep) {
        INFO(m.mutant);
        REQUIRE(m.detected);
        REQUIRE(!m.check.empty());
    }
}

TEST_CASE("corruption builders reject out-of-range sites") {
    const Builtins& b = builtins();
    REQUIRE_THROWS_AS(with_sq_entry(b.bso3, 5, 1, PolyGF2::zero(2)), AlgebraError);
    REQUIRE_THROWS_AS(with_relation(b.n_ring, 2, PolyGF2::zero(4)), AlgebraError);
    REQUIRE_THROWS_AS(without_relation(b.m_ring, 1), AlgebraError);
}
