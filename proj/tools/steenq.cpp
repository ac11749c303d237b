/* Command-line front end.
 *
 * Exit codes: 0 success / all checks pass, 1 a check fails, 2 usage or
 * parse errors, 3 a degree or index guard stopped the computation.
 */

#include <cctype>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steenq/algebra_io.hpp"
#include "steenq/builtins.hpp"
#include "steenq/groebner.hpp"
#include "steenq/milnor.hpp"
#include "steenq/quotient.hpp"
#include "steenq/series.hpp"
#include "steenq/text.hpp"
#include "steenq/verifier.hpp"

namespace {

using namespace steenq;

struct CommonOpts {
    std::string algebra = "BSO3";
    long long max_degree = -1; /* negative: use per-command default */
    int max_m = -1;
    std::string format = "human";
    std::string order = "grevlex";
    std::string precedence; /* comma-separated generator indices */
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--algebra", o.algebra, "Built-in algebra name or definition file path");
    cmd->add_option("--max-degree", o.max_degree, "Degree bound for the computation");
    cmd->add_option("--max-m", o.max_m, "Largest Milnor operation index");
    cmd->add_option("--format", o.format, "Output format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--order", o.order, "Monomial order: grevlex or grlex")
        ->check(CLI::IsMember({"grevlex", "grlex"}));
    cmd->add_option("--precedence", o.precedence,
                    "Comma-separated generator indices, highest first");
}

AlgebraPresentation resolve_algebra(const std::string& name) {
    if (const AlgebraPresentation* p = find_builtin(name)) return *p;
    return load_algebra_file(name);
}

MonomialOrder make_order(const CommonOpts& o, size_t nvars) {
    MonomialOrder order = o.order == "grlex" ? MonomialOrder::grlex(nvars)
                                             : MonomialOrder::grevlex(nvars);
    if (!o.precedence.empty()) {
        order.precedence.clear();
        std::string item;
        std::istringstream in(o.precedence);
        while (std::getline(in, item, ','))
            order.precedence.push_back(static_cast<size_t>(std::stoull(item)));
        order.validate(nvars);
    }
    return order;
}

struct OpToken {
    bool is_sq = true;
    long long index = 0;
};

/* Grammar: `Sq^<i>` | `Q_<m>`, composed with `.`, rightmost applied first. */
std::vector<OpToken> parse_ops(const std::string& spec) {
    std::vector<OpToken> out;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t dot = spec.find('.', pos);
        size_t end = dot == std::string::npos ? spec.size() : dot;
        size_t a = pos, z = end;
        while (a < z && std::isspace(static_cast<unsigned char>(spec[a]))) ++a;
        while (z > a && std::isspace(static_cast<unsigned char>(spec[z - 1]))) --z;
        std::string tok = spec.substr(a, z - a);
        OpToken t;
        size_t digits = 0;
        if (tok.rfind("Sq^", 0) == 0) {
            t.is_sq = true;
            digits = 3;
        } else if (tok.rfind("Q_", 0) == 0) {
            t.is_sq = false;
            digits = 2;
        } else {
            throw ParseError("expected Sq^<i> or Q_<m>, got '" + tok + "'", a);
        }
        if (digits >= tok.size()) throw ParseError("missing index in '" + tok + "'", a);
        for (size_t i = digits; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw ParseError("bad index in '" + tok + "'", a + i);
        t.index = std::stoll(tok.substr(digits));
        if (!t.is_sq && t.index > 56)
            throw BoundError("operation index " + std::to_string(t.index) +
                             " is too large for degree arithmetic");
        out.push_back(t);
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    if (out.empty()) throw ParseError("empty operation spec", 0);
    return out;
}

int cmd_apply(const CommonOpts& o, const std::string& op_spec, const std::string& expr) {
    AlgebraPresentation A = resolve_algebra(o.algebra);
    /* the input's own degree is only bounded by --max-degree when given */
    PolyGF2 p = [&] {
        DegreeCapGuard parse_guard(o.max_degree >= 0
                                       ? o.max_degree
                                       : std::numeric_limits<long long>::max() / 4);
        return parse_poly(expr, A.generators);
    }();
    std::vector<OpToken> ops = parse_ops(op_spec);

    long long need = 0;
    for (const Monomial& t : p.terms()) need = std::max(need, t.degree());
    for (const OpToken& t : ops) need += t.is_sq ? t.index : (2ll << t.index);
    DegreeCapGuard guard(o.max_degree >= 0 ? o.max_degree : need);

    /* an explicit --max-m bounds every Q index; otherwise size the cap to fit */
    int qcap = o.max_m >= 0 ? o.max_m : kDefaultMaxM;
    if (o.max_m < 0)
        for (const OpToken& t : ops)
            if (!t.is_sq) qcap = std::max(qcap, static_cast<int>(t.index));
    std::optional<MilnorOps> milnor;
    SteenrodEngine eng(A);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->is_sq) {
            p = eng.sq(it->index, p);
        } else {
            if (!milnor) milnor.emplace(A, qcap);
            p = milnor->q_derivation(static_cast<int>(it->index), p);
        }
    }
    if (!A.relations.empty()) p = normal_form(buchberger(A, make_order(o, A.nvars())), p);

    std::string printed = to_string(p, A.generators);
    if (o.format == "json") {
        nlohmann::ordered_json j{{"algebra", A.name},
                                 {"op", op_spec},
                                 {"input", expr},
                                 {"result", printed}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << printed << "\n";
    }
    return 0;
}

int cmd_basis(const CommonOpts& o, long long degree, long long weight, bool has_weight) {
    AlgebraPresentation A = resolve_algebra(o.algebra);
    long long guard = o.max_degree >= 0 ? o.max_degree : kDefaultDegreeGuard;
    GroebnerBasis G = buchberger(A, make_order(o, A.nvars()), guard);
    std::optional<long long> w;
    if (has_weight) w = weight;
    std::vector<Monomial> basis = standard_monomials(G, degree, w);
    if (o.format == "json") {
        nlohmann::ordered_json monos = nlohmann::ordered_json::array();
        for (const Monomial& m : basis) monos.push_back(to_string(m, A.generators));
        nlohmann::ordered_json j{{"algebra", A.name},
                                 {"degree", degree},
                                 {"dimension", basis.size()},
                                 {"monomials", std::move(monos)}};
        if (has_weight) j["weight"] = weight;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Monomial& m : basis) std::cout << to_string(m, A.generators) << "\n";
        std::cout << "dimension: " << basis.size() << "\n";
    }
    return 0;
}

int cmd_poincare(const CommonOpts& o, long long max_degree, const std::string& series_text) {
    AlgebraPresentation A = resolve_algebra(o.algebra);
    long long guard = std::max(max_degree, kDefaultDegreeGuard);
    GroebnerBasis G = buchberger(A, make_order(o, A.nvars()), guard);
    std::vector<long long> dims = dims_by_degree(G, max_degree);
    std::optional<std::vector<long long>> expected;
    if (!series_text.empty()) expected = expand(parse_series(series_text), max_degree);
    bool match = true;
    long long first_mismatch = -1;
    if (expected)
        for (long long d = 0; d <= max_degree; ++d)
            if (dims[static_cast<size_t>(d)] != (*expected)[static_cast<size_t>(d)]) {
                match = false;
                first_mismatch = d;
                break;
            }
    if (o.format == "json") {
        nlohmann::ordered_json j{{"algebra", A.name}, {"dims", dims}};
        if (expected) {
            j["expected"] = *expected;
            j["match"] = match;
            if (!match) j["first_mismatch"] = first_mismatch;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (long long d = 0; d <= max_degree; ++d)
            std::cout << d << "\t" << dims[static_cast<size_t>(d)] << "\n";
        if (expected) {
            if (match)
                std::cout << "series: match\n";
            else
                std::cout << "series: mismatch at degree " << first_mismatch << "\n";
        }
    }
    return expected && !match ? 1 : 0;
}

int cmd_verify(const CommonOpts& o, const std::vector<std::string>& claims) {
    VerifyConfig cfg;
    if (o.max_degree >= 0) cfg.max_degree = o.max_degree;
    if (o.max_m >= 0) cfg.max_m = o.max_m;
    Verifier v(cfg);
    std::vector<ClaimResult> results = v.run_all();
    if (!claims.empty()) {
        std::vector<ClaimResult> picked;
        for (const std::string& id : claims) {
            bool found = false;
            for (const ClaimResult& r : results)
                if (r.id == id) {
                    picked.push_back(r);
                    found = true;
                }
            if (!found) {
                std::cerr << "unknown claim id: " << id << "\n";
                return 2;
            }
        }
        results = std::move(picked);
    }
    if (o.format == "json")
        std::cout << report_json(results) << "\n";
    else
        print_report_table(results, std::cout);
    return exit_code_for(results);
}

int cmd_algebras(const CommonOpts& o) {
    if (o.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const std::string& n : builtin_names()) j.push_back(n);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const std::string& n : builtin_names()) std::cout << n << "\n";
    }
    return 0;
}

int cmd_check_algebra(const CommonOpts& o, const std::string& path) {
    AlgebraPresentation A = load_algebra_file(path);
    if (o.format == "json") {
        nlohmann::ordered_json j{{"name", A.name},
                                 {"generators", A.nvars()},
                                 {"relations", A.relations.size()},
                                 {"has_sq_table", A.has_sq()},
                                 {"ok", true}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << A.name << ": " << A.nvars() << " generators, " << A.relations.size()
                  << " relations, " << (A.has_sq() ? "with" : "no") << " Steenrod table: ok\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded polynomial algebras over GF(2) with Steenrod operations"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* apply = app.add_subcommand("apply", "Apply an operation expression to a polynomial");
    std::string op_spec, expr;
    apply->add_option("--op", op_spec, "Operation spec, e.g. Sq^2 or Q_0.Q_1")->required();
    apply->add_option("--expr", expr, "Polynomial expression")->required();
    add_common(apply, o);

    auto* basis = app.add_subcommand("basis", "Monomial basis of one degree slice");
    long long degree = 0, weight = 0;
    auto* wopt = basis->add_option("--weight", weight, "Restrict to one weight");
    basis->add_option("--degree", degree, "Degree of the slice")->required();
    add_common(basis, o);

    auto* poincare = app.add_subcommand("poincare", "Dimensions by degree");
    long long pmax = 0;
    std::string series_text;
    poincare->add_option("--max-degree", pmax, "Largest degree to report")->required();
    poincare->add_option("--series", series_text, "Expected rational series to compare");
    poincare->add_option("--algebra", o.algebra, "Built-in algebra name or definition file path");
    poincare->add_option("--format", o.format, "Output format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    poincare->add_option("--order", o.order, "Monomial order: grevlex or grlex")
        ->check(CLI::IsMember({"grevlex", "grlex"}));
    poincare->add_option("--precedence", o.precedence,
                         "Comma-separated generator indices, highest first");

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    bool all = false;
    std::vector<std::string> claim_ids;
    verify->add_flag("--all", all, "Run every claim (the default)");
    verify->add_option("--claim", claim_ids, "Run only the named claims");
    add_common(verify, o);

    auto* algebras = app.add_subcommand("algebras", "List built-in algebras");
    add_common(algebras, o);

    auto* check = app.add_subcommand("check-algebra", "Validate an algebra definition file");
    std::string path;
    check->add_option("file", path, "Definition file")->required();
    add_common(check, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (apply->parsed()) return cmd_apply(o, op_spec, expr);
        if (basis->parsed()) return cmd_basis(o, degree, weight, wopt->count() > 0);
        if (poincare->parsed()) return cmd_poincare(o, pmax, series_text);
        if (verify->parsed()) return cmd_verify(o, claim_ids);
        if (algebras->parsed()) return cmd_algebras(o);
        if (check->parsed()) return cmd_check_algebra(o, path);
    } catch (const BoundError& e) {
        std::cerr << "bound: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
