#pragma once

/* JSON serialization of algebra presentations.
 *
 * File format:
 *   {
 *     "name": "BSO3",
 *     "generators": [{"name": "w2", "degree": 2, "weight": 0}, ...],
 *     "sq": {"w2": ["w2", "w3", "w2^2"], ...},
 *     "relations": ["w2'*w3'' + w2''*w3'", ...]
 *   }
 *
 * "weight" defaults to 0 and "relations" to none. Omitting "sq" entirely
 * yields an algebra with no Steenrod action; when "sq" is present, a
 * generator's row may be missing, empty, or short, and the gaps are filled
 * with the forced values (Sq^0 g = g, Sq^deg g = g^2) and zero in between.
 * An empty string entry also means zero.
 */

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "presentation.hpp"
#include "text.hpp"

namespace steenq {

inline AlgebraPresentation algebra_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw AlgebraError("algebra file: top level must be an object");
    AlgebraPresentation A;
    A.name = j.value("name", std::string("unnamed"));
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw AlgebraError("algebra file: \"generators\" must be a nonempty array");
    for (const auto& g : j["generators"]) {
        if (!g.is_object() || !g.contains("name") || !g.contains("degree"))
            throw AlgebraError("algebra file: generator entries need \"name\" and \"degree\"");
        GeneratorInfo info;
        info.name = g["name"].get<std::string>();
        info.degree = g["degree"].get<long long>();
        info.weight = g.value("weight", 0ll);
        A.generators.push_back(std::move(info));
    }
    if (j.contains("sq")) {
        if (!j["sq"].is_object()) throw AlgebraError("algebra file: \"sq\" must be an object");
        for (const auto& [key, val] : j["sq"].items()) {
            if (!A.generator_index(key))
                throw AlgebraError("algebra file: sq entry for unknown generator '" + key + "'");
            if (!val.is_array())
                throw AlgebraError("algebra file: sq rows must be arrays of polynomial strings");
        }
        std::vector<std::vector<PolyGF2>> table;
        for (size_t g = 0; g < A.nvars(); ++g) {
            long long deg = A.generators[g].degree;
            std::vector<PolyGF2> row;
            row.push_back(A.gen_poly(g));
            for (long long i = 1; i < deg; ++i) row.push_back(PolyGF2::zero(A.nvars()));
            row.push_back(frobenius(A.gen_poly(g)));
            if (j["sq"].contains(A.generators[g].name)) {
                const auto& given = j["sq"][A.generators[g].name];
                if (given.size() > static_cast<size_t>(deg) + 1)
                    throw AlgebraError("algebra file: sq row for '" + A.generators[g].name +
                                       "' is longer than degree + 1");
                for (size_t i = 0; i < given.size(); ++i) {
                    std::string text = given[i].get<std::string>();
                    if (text.empty()) continue; /* keep the filled default */
                    row[i] = parse_poly(text, A.generators);
                }
            }
            table.push_back(std::move(row));
        }
        A.sq_table = std::move(table);
    }
    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw AlgebraError("algebra file: \"relations\" must be an array");
        for (const auto& r : j["relations"])
            A.relations.push_back(parse_poly(r.get<std::string>(), A.generators));
    }
    validate(A);
    return A;
}

inline AlgebraPresentation load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AlgebraError("cannot open algebra file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("algebra file is not valid JSON: ") + e.what(), 0);
    }
    return algebra_from_json(j);
}

inline nlohmann::ordered_json algebra_to_json(const AlgebraPresentation& A) {
    nlohmann::ordered_json j;
    j["name"] = A.name;
    j["generators"] = nlohmann::ordered_json::array();
    for (const GeneratorInfo& g : A.generators)
        j["generators"].push_back({{"name", g.name}, {"degree", g.degree}, {"weight", g.weight}});
    if (A.has_sq()) {
        nlohmann::ordered_json sq = nlohmann::ordered_json::object();
        for (size_t g = 0; g < A.nvars(); ++g) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (const PolyGF2& p : (*A.sq_table)[g]) row.push_back(to_string(p, A.generators));
            sq[A.generators[g].name] = std::move(row);
        }
        j["sq"] = std::move(sq);
    }
    if (!A.relations.empty()) {
        nlohmann::ordered_json rels = nlohmann::ordered_json::array();
        for (const PolyGF2& r : A.relations) rels.push_back(to_string(r, A.generators));
        j["relations"] = std::move(rels);
    }
    return j;
}

} // namespace steenq
