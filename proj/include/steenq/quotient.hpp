#pragma once

/* Degreewise linear algebra over a Groebner presentation.
 *
 * Standard monomials (monomials no rule lead divides) form a GF(2) basis of
 * the quotient in each degree, so dimension counts, Poincare series checks,
 * and injectivity of linear maps all reduce to ranks of bit matrices over
 * that basis. Every report carries an explicit witness on failure: a kernel
 * element for a rank defect, a degree and the two counts for a series
 * mismatch.
 */

#include <map>
#include <optional>
#include <vector>

#include "f2linalg.hpp"
#include "groebner.hpp"
#include "series.hpp"

namespace steenq {

/* Monomials of the given degree (and weight, when asked) that are in normal
 * form. Enumeration cost grows with degree; the basis degree_guard bounds
 * how far a caller may push it. */
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& G, long long degree,
                                                std::optional<long long> weight = std::nullopt) {
    if (degree > G.degree_guard())
        throw BoundError("standard_monomials: degree " + std::to_string(degree) +
                         " exceeds guard " + std::to_string(G.degree_guard()));
    std::vector<Monomial> out;
    for (Monomial& m : monomials_of_degree(G.gens(), degree)) {
        if (weight && m.weight() != *weight) continue;
        if (!G.reducible(m)) out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<long long> dims_by_degree(const GroebnerBasis& G, long long max_degree,
                                             std::optional<long long> weight = std::nullopt) {
    std::vector<long long> dims;
    dims.reserve(static_cast<size_t>(max_degree) + 1);
    for (long long d = 0; d <= max_degree; ++d)
        dims.push_back(static_cast<long long>(standard_monomials(G, d, weight).size()));
    return dims;
}

struct PoincareReport {
    bool ok = true;
    long long first_mismatch = -1;
    long long expected = 0;
    long long got = 0;
};

inline PoincareReport poincare_check(const GroebnerBasis& G, const RationalSeries& series,
                                     long long max_degree) {
    PoincareReport rep;
    std::vector<long long> want = expand(series, max_degree);
    for (long long d = 0; d <= max_degree; ++d) {
        long long got = static_cast<long long>(standard_monomials(G, d).size());
        if (got == want[static_cast<size_t>(d)]) continue;
        rep.ok = false;
        rep.first_mismatch = d;
        rep.expected = want[static_cast<size_t>(d)];
        rep.got = got;
        return rep;
    }
    return rep;
}

struct InjectivityReport {
    bool injective = true;
    long long failure_degree = -1;
    std::optional<PolyGF2> kernel_witness; /* nonzero source element mapping to 0 */
    long long degrees_checked = 0;
};

namespace detail {

/* Row coordinates of p against an indexed monomial basis. A monomial
 * outside the index means the caller's basis does not span p. */
inline std::vector<size_t> coordinates(const PolyGF2& p,
                                       const std::map<std::vector<uint32_t>, size_t>& index) {
    std::vector<size_t> row;
    row.reserve(p.terms().size());
    for (const Monomial& t : p.terms()) {
        auto it = index.find(t.exps());
        if (it == index.end())
            throw AlgebraError("coordinates: element lies outside the expected span");
        row.push_back(it->second);
    }
    return row;
}

inline std::map<std::vector<uint32_t>, size_t> index_of(const std::vector<Monomial>& basis) {
    std::map<std::vector<uint32_t>, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].exps(), i);
    return index;
}

/* Rank test for a list of images against a known spanning basis; on rank
 * defect returns the combination of domain indices that maps to zero. */
inline std::optional<std::vector<size_t>> kernel_combination(
    const std::vector<PolyGF2>& images, const std::vector<Monomial>& target_basis) {
    BitMatrix mat(target_basis.size());
    auto index = index_of(target_basis);
    for (const PolyGF2& img : images) mat.add_row(coordinates(img, index));
    return mat.dependency();
}

} // namespace detail

/* Is multiplication by f injective on the quotient in every degree d with
 * d + deg f <= max_degree? f must be homogeneous and nonzero. */
inline InjectivityReport mult_injective(const GroebnerBasis& G, const PolyGF2& f,
                                        long long max_degree) {
    if (f.is_zero()) throw AlgebraError("mult_injective: zero multiplier");
    long long df = *degree(f);
    InjectivityReport rep;
    for (long long d = 0; d + df <= max_degree; ++d) {
        std::vector<Monomial> domain = standard_monomials(G, d);
        if (domain.empty()) continue;
        std::vector<Monomial> target = standard_monomials(G, d + df);
        std::vector<PolyGF2> images;
        images.reserve(domain.size());
        for (const Monomial& b : domain) images.push_back(normal_form(G, mul(f, b)));
        auto dep = detail::kernel_combination(images, target);
        ++rep.degrees_checked;
        if (!dep) continue;
        std::vector<Monomial> terms;
        for (size_t i : *dep) terms.push_back(domain[i]);
        rep.injective = false;
        rep.failure_degree = d;
        rep.kernel_witness = PolyGF2::from_terms(G.nvars(), std::move(terms));
        return rep;
    }
    return rep;
}

/* Is the algebra map f injective on the source quotient through max_degree?
 * Images are reduced modulo target when a target basis is given, otherwise
 * the target is taken to be free. */
inline InjectivityReport hom_injective(const GroebnerBasis& source, const RingHom& f,
                                       const GroebnerBasis* target, long long max_degree) {
    InjectivityReport rep;
    for (long long d = 0; d <= max_degree; ++d) {
        std::vector<Monomial> domain = standard_monomials(source, d);
        if (domain.empty()) continue;
        std::vector<PolyGF2> images;
        images.reserve(domain.size());
        std::vector<Monomial> target_basis;
        std::map<std::vector<uint32_t>, size_t> seen;
        for (const Monomial& b : domain) {
            PolyGF2 img = apply_hom(f, PolyGF2::from_monomial(b));
            if (target) img = normal_form(*target, img);
            for (const Monomial& t : img.terms()) {
                if (seen.emplace(t.exps(), target_basis.size()).second)
                    target_basis.push_back(t);
            }
            images.push_back(std::move(img));
        }
        auto dep = detail::kernel_combination(images, target_basis);
        ++rep.degrees_checked;
        if (!dep) continue;
        std::vector<Monomial> terms;
        for (size_t i : *dep) terms.push_back(domain[i]);
        rep.injective = false;
        rep.failure_degree = d;
        rep.kernel_witness = PolyGF2::from_terms(source.nvars(), std::move(terms));
        return rep;
    }
    return rep;
}

struct RegularSequenceReport {
    bool ok = true;
    long long failed_stage = -1; /* 0-based index into the sequence */
    InjectivityReport injectivity;
    PoincareReport series;
};

/* Checks that seq is a regular sequence in the free algebra on gens through
 * max_degree: multiplication by seq[k] is injective on the quotient by the
 * previous elements, and the final quotient has the predicted series. */
inline RegularSequenceReport regular_sequence_check(const GenList& gens,
                                                    const std::vector<PolyGF2>& seq,
                                                    long long max_degree,
                                                    const MonomialOrder& order,
                                                    long long degree_guard = kDefaultDegreeGuard) {
    RegularSequenceReport rep;
    std::vector<long long> relation_degrees;
    std::vector<PolyGF2> prefix;
    for (size_t k = 0; k < seq.size(); ++k) {
        GroebnerBasis G = buchberger(gens, prefix, order, degree_guard);
        rep.injectivity = mult_injective(G, seq[k], max_degree);
        if (!rep.injectivity.injective) {
            rep.ok = false;
            rep.failed_stage = static_cast<long long>(k);
            return rep;
        }
        relation_degrees.push_back(*degree(seq[k]));
        prefix.push_back(seq[k]);
    }
    GroebnerBasis G = buchberger(gens, prefix, order, degree_guard);
    rep.series = poincare_check(G, quotient_series(gens, relation_degrees), max_degree);
    if (!rep.series.ok) rep.ok = false;
    return rep;
}

} // namespace steenq
