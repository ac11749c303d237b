#pragma once

/* Seeded random homogeneous polynomials for property tests. All suites use
 * fixed seeds so failures replay deterministically. */

#include <random>
#include <vector>

#include "steenq/poly.hpp"

namespace steenq::testing {

inline PolyGF2 random_homogeneous(std::mt19937& rng, const GenList& gens, long long degree) {
    std::vector<Monomial> all = monomials_of_degree(gens, degree);
    std::vector<Monomial> picked;
    for (const Monomial& m : all)
        if (rng() & 1u) picked.push_back(m);
    if (picked.empty() && !all.empty()) picked.push_back(all[rng() % all.size()]);
    return PolyGF2::from_terms(gens.size(), std::move(picked));
}

} // namespace steenq::testing
