#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "steenq/algebra_io.hpp"
#include "steenq/builtins.hpp"
#include "steenq/milnor.hpp"
#include "steenq/text.hpp"

using namespace steenq;

#ifndef STEENQ_CLI
#error "STEENQ_CLI must name the command-line binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int call = 0;
    std::string stem = "/tmp/steenq_cli_" + std::to_string(++call);
    std::string cmd =
        std::string(STEENQ_CLI) + " " + args + " > " + stem + ".out 2> " + stem + ".err";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(stem + ".out");
    r.err = slurp(stem + ".err");
    return r;
}

} // namespace

TEST_CASE("apply reproduces the displayed operator values") {
    RunResult r = run_cli("apply --algebra BSO3 --op \"Q_1\" --expr \"w2\"");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "w2*w3\n");

    r = run_cli("apply --algebra BSO3 --op \"Q_0.Q_1\" --expr \"w2\"");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "w3^2\n");
}

TEST_CASE("apply kills the degree-13 class in the quotient") {
    RunResult r = run_cli(
        "apply --algebra N --op \"Q_2\" --expr \"w2'^3*w2''^2*w3' + w2'*w2''^4*w3'\"");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "0\n");
}

TEST_CASE("apply output is round-trippable and matches the library") {
    RunResult r = run_cli("apply --algebra BSO3 --op \"Sq^2.Sq^1\" --expr \"w2*w3\"");
    REQUIRE(r.code == 0);
    std::string line = r.out;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    const AlgebraPresentation& A = builtins().bso3;
    SteenrodEngine eng(A);
    PolyGF2 want = eng.sq(2, eng.sq(1, parse_poly("w2*w3", A.generators)));
    REQUIRE(parse_poly(line, A.generators) == want);
}

TEST_CASE("apply emits JSON when asked") {
    RunResult r = run_cli("apply --algebra BSO3 --op \"Q_1\" --expr \"w2\" --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["algebra"] == "BSO3");
    REQUIRE(j["op"] == "Q_1");
    REQUIRE(j["input"] == "w2");
    REQUIRE(j["result"] == "w2*w3");
}

TEST_CASE("basis lists the degree-5 weight-1 slice of N") {
    RunResult r = run_cli("basis --algebra N --degree 5 --weight 1");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("w2'*w3'") != std::string::npos);
    REQUIRE(r.out.find("w2'*w3''") != std::string::npos);
    REQUIRE(r.out.find("w2''*w3''") != std::string::npos);
    REQUIRE(r.out.find("dimension: 3") != std::string::npos);

    r = run_cli("basis --algebra N --degree 5 --weight 1 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["dimension"] == 3);
    REQUIRE(j["weight"] == 1);
    REQUIRE(j["monomials"].size() == 3);
}

TEST_CASE("basis past the rewriting guard exits with the bound code") {
    RunResult r = run_cli("basis --algebra N --degree 70");
    REQUIRE(r.code == 3);
    REQUIRE(r.err.rfind("bound: ", 0) == 0);

    /* an explicit --max-degree raises the guard and the same request works */
    r = run_cli("basis --algebra N --degree 70 --max-degree 70 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["dimension"].get<long long>() > 0);
}

TEST_CASE("poincare compares dimensions against a rational series") {
    RunResult r = run_cli(
        "poincare --algebra N --max-degree 12 "
        "--series \"(1-t^5)(1-t^9)/((1-t^2)^2(1-t^3)^2)\"");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("series: match") != std::string::npos);
    REQUIRE(r.out.find("12\t16") != std::string::npos);

    r = run_cli("poincare --algebra N --max-degree 12 --series \"1/(1-t)\"");
    REQUIRE(r.code == 1);
    REQUIRE(r.out.find("series: mismatch at degree 1") != std::string::npos);
}

TEST_CASE("verify runs the bounded suite and reports JSON") {
    RunResult r = run_cli("verify --max-degree 10 --max-m 3 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["claims"].size() == 17);
    for (const auto& c : j["claims"]) REQUIRE(c["status"] == "pass");
}

TEST_CASE("verify filters to named claims") {
    RunResult r = run_cli("verify --claim WuTable --claim Thm1.4 --max-degree 8 --max-m 2");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("WuTable") != std::string::npos);
    REQUIRE(r.out.find("Thm1.4") != std::string::npos);
    REQUIRE(r.out.find("Lemma2.1") == std::string::npos);

    r = run_cli("verify --claim NoSuchClaim --max-degree 8 --max-m 2");
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("unknown claim id") != std::string::npos);
}

TEST_CASE("verify with empty bounds skips and signals it") {
    RunResult r = run_cli("verify --max-degree 0 --format json");
    REQUIRE(r.code == 3);
    nlohmann::json j = nlohmann::json::parse(r.out);
    for (const auto& c : j["claims"]) REQUIRE(c["status"] == "skip");
}

TEST_CASE("operation and expression errors use the usage exit code") {
    RunResult r = run_cli("apply --algebra BSO3 --op \"Sqq\" --expr \"w2\"");
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("parse error") != std::string::npos);

    r = run_cli("apply --algebra BSO3 --op \"Sq^1\" --expr \"w2 +\"");
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("parse error") != std::string::npos);

    r = run_cli("apply --algebra BSO3 --op \"Q_60\" --expr \"w2\"");
    REQUIRE(r.code == 3); /* index guard, not a usage error */

    r = run_cli("basis --algebra NOPE --degree 2");
    REQUIRE(r.code == 2);

    r = run_cli("");
    REQUIRE(r.code == 2);
}

TEST_CASE("algebras lists the built-ins") {
    RunResult r = run_cli("algebras");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("BSO3") != std::string::npos);
    REQUIRE(r.out.find("N") != std::string::npos);
}

TEST_CASE("check-algebra accepts a round-tripped definition file") {
    std::string path = "/tmp/steenq_cli_algebra.json";
    {
        std::ofstream out(path);
        out << algebra_to_json(builtins().bso3).dump(2) << "\n";
    }
    RunResult r = run_cli("check-algebra " + path);
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("ok") != std::string::npos);

    /* and the loaded file equals the original presentation in memory */
    AlgebraPresentation back = load_algebra_file(path);
    REQUIRE(back.name == builtins().bso3.name);
    REQUIRE(back.relations == builtins().bso3.relations);
    REQUIRE(back.sq_table == builtins().bso3.sq_table);
}

TEST_CASE("check-algebra rejects malformed files") {
    std::string bad_json = "/tmp/steenq_cli_bad.json";
    {
        std::ofstream out(bad_json);
        out << "{]";
    }
    RunResult r = run_cli("check-algebra " + bad_json);
    REQUIRE(r.code == 2);

    std::string bad_algebra = "/tmp/steenq_cli_bad_algebra.json";
    {
        std::ofstream out(bad_algebra);
        out << R"({"name": "X", "generators": [{"name": "g", "degree": 0}]})";
    }
    r = run_cli("check-algebra " + bad_algebra);
    REQUIRE(r.code == 2);

    r = run_cli("check-algebra /tmp/steenq_cli_missing.json");
    REQUIRE(r.code == 2);
}
