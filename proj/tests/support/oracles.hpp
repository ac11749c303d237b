#pragma once

/* Independent test oracles. The rank computation here deliberately avoids
 * the library's BitMatrix so quotient dimensions are cross-checked by a
 * second implementation. */

#include <optional>
#include <vector>

#include "steenq/poly.hpp"

namespace steenq::testing {

/* Row reduction over GF(2) on dense 0/1 rows. */
inline size_t dense_rank(std::vector<std::vector<unsigned char>> rows) {
    size_t rank = 0;
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][col])
                for (size_t c = col; c < ncols; ++c)
                    rows[r][c] = static_cast<unsigned char>(rows[r][c] ^ rows[rank][c]);
        ++rank;
    }
    return rank;
}

/* Dimension of the degree-d (optionally single-weight) slice of the quotient
 * by homogeneous relations, computed by brute force: monomial count minus
 * the rank of the spanning set {relation * monomial}. */
inline long long brute_quotient_dim(const GenList& gens, const std::vector<PolyGF2>& relations,
                                    long long d, std::optional<long long> weight = std::nullopt) {
    std::vector<Monomial> cols;
    for (const Monomial& m : monomials_of_degree(gens, d))
        if (!weight || m.weight() == *weight) cols.push_back(m);
    if (cols.empty()) return 0;
    std::vector<std::vector<unsigned char>> rows;
    auto col_of = [&](const Monomial& m) -> std::optional<size_t> {
        for (size_t i = 0; i < cols.size(); ++i)
            if (cols[i].exps() == m.exps()) return i;
        return std::nullopt;
    };
    for (const PolyGF2& r : relations) {
        long long dr = *degree(r);
        if (dr > d) continue;
        for (const Monomial& m : monomials_of_degree(gens, d - dr)) {
            PolyGF2 prod = mul(r, m);
            std::vector<unsigned char> row(cols.size(), 0);
            bool in_slice = true;
            for (const Monomial& t : prod.terms()) {
                auto c = col_of(t);
                if (!c) {
                    in_slice = false; /* product lands in another weight */
                    break;
                }
                row[*c] = 1;
            }
            if (in_slice) rows.push_back(std::move(row));
        }
    }
    return static_cast<long long>(cols.size()) - static_cast<long long>(dense_rank(rows));
}

} // namespace steenq::testing
