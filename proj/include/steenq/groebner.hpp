#pragma once

/* Buchberger completion and normal forms over GF(2).
 *
 * A GroebnerBasis stores the reduced basis of an ideal as rewrite rules
 * lead -> tail (the basis element is lead + tail, and over GF(2) reduction
 * replaces an occurrence of lead by tail). Reduced means no rule's lead
 * divides any monomial of another rule, so normal forms are unique and
 * normal_form is a linear projection onto the standard monomials.
 *
 * Completion runs the classical pair algorithm with a FIFO pair queue and
 * the coprimality criterion. The lcm degree of every processed pair is
 * checked against degree_guard; exceeding it raises BoundError rather than
 * letting a runaway completion spin.
 */

#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

#include "order.hpp"
#include "presentation.hpp"

namespace steenq {

inline constexpr long long kDefaultDegreeGuard = 64;

struct ReductionRule {
    Monomial lead;
    PolyGF2 tail;

    PolyGF2 poly() const { return add(PolyGF2::from_monomial(lead), tail); }
};

class GroebnerBasis {
public:
    GroebnerBasis(GenList gens, MonomialOrder order, std::vector<ReductionRule> rules,
                  long long degree_guard)
        : gens_(std::move(gens)),
          order_(std::move(order)),
          rules_(std::move(rules)),
          degree_guard_(degree_guard) {}

    const GenList& gens() const { return gens_; }
    size_t nvars() const { return gens_.size(); }
    const MonomialOrder& order() const { return order_; }
    const std::vector<ReductionRule>& rules() const { return rules_; }
    long long degree_guard() const { return degree_guard_; }

    bool reducible(const Monomial& m) const {
        for (const ReductionRule& r : rules_)
            if (divides(r.lead, m)) return true;
        return false;
    }

private:
    GenList gens_;
    MonomialOrder order_;
    std::vector<ReductionRule> rules_;
    long long degree_guard_;
};

namespace detail {

/* One rewrite of the order-largest reducible monomial of work, or false if
 * work is already in normal form. Every monomial introduced by the rewrite
 * is order-smaller than the one removed, so iterating terminates. */
inline bool reduce_step(PolyGF2& work, const std::vector<ReductionRule>& rules,
                        const MonomialOrder& order) {
    const Monomial* target = nullptr;
    const ReductionRule* rule = nullptr;
    for (const Monomial& t : work.terms()) {
        if (target && !order.less(*target, t)) continue;
        for (const ReductionRule& r : rules) {
            if (divides(r.lead, t)) {
                target = &t;
                rule = &r;
                break;
            }
        }
    }
    if (!target) return false;
    Monomial q = quotient(*target, rule->lead);
    /* adding (lead + tail) * q cancels the target term */
    work = add(work, mul(rule->poly(), q));
    return true;
}

inline PolyGF2 reduce_full(PolyGF2 work, const std::vector<ReductionRule>& rules,
                           const MonomialOrder& order) {
    while (reduce_step(work, rules, order)) {
    }
    return work;
}

inline ReductionRule make_rule(const PolyGF2& p, const MonomialOrder& order) {
    Monomial lead = order.leading(p);
    return {lead, add(p, PolyGF2::from_monomial(lead))};
}

} // namespace detail

/* Normal form of p modulo G. Reduction is linear, so the polynomial is
 * reduced one input term at a time; this keeps the working polynomial small
 * even when p itself has many terms. */
inline PolyGF2 normal_form(const GroebnerBasis& G, const PolyGF2& p) {
    require_same_arity(p.nvars(), G.nvars(), "normal_form");
    /* degree-homogeneous rewriting never raises degree, so the input's own
     * degree is a safe working cap */
    long long maxd = 0;
    for (const Monomial& t : p.terms()) maxd = std::max(maxd, t.degree());
    DegreeCapGuard guard(maxd);
    std::vector<Monomial> acc;
    for (const Monomial& t : p.terms()) {
        PolyGF2 work = detail::reduce_full(PolyGF2::from_monomial(t), G.rules(), G.order());
        for (const Monomial& r : work.terms()) acc.push_back(r);
    }
    return PolyGF2::from_terms(p.nvars(), std::move(acc));
}

inline PolyGF2 s_polynomial(const PolyGF2& a, const PolyGF2& b, const MonomialOrder& order,
                            const GenList& gens) {
    const Monomial& la = order.leading(a);
    const Monomial& lb = order.leading(b);
    Monomial l = lcm(la, lb, gens);
    return add(mul(a, quotient(l, la)), mul(b, quotient(l, lb)));
}

/* Completion. Input polynomials must be nonzero-safe (zeros are dropped);
 * the result is the unique reduced basis for the given order, with rules
 * sorted ascending by their leads. */
inline GroebnerBasis buchberger(const GenList& gens, const std::vector<PolyGF2>& inputs,
                                MonomialOrder order,
                                long long degree_guard = kDefaultDegreeGuard) {
    order.validate(gens.size());
    std::vector<ReductionRule> basis;
    for (const PolyGF2& p : inputs) {
        if (p.is_zero()) continue;
        require_same_arity(p.nvars(), gens.size(), "buchberger");
        PolyGF2 r = detail::reduce_full(p, basis, order);
        if (!r.is_zero()) basis.push_back(detail::make_rule(r, order));
    }
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial& li = basis[i].lead;
        const Monomial& lj = basis[j].lead;
        Monomial l = lcm(li, lj, gens);
        /* coprime leads give an S-polynomial that always reduces to zero */
        if (l.degree() == li.degree() + lj.degree()) continue;
        if (l.degree() > degree_guard)
            throw BoundError("buchberger: pair lcm degree " + std::to_string(l.degree()) +
                             " exceeds guard " + std::to_string(degree_guard));
        PolyGF2 s = add(mul(basis[i].poly(), quotient(l, li)),
                        mul(basis[j].poly(), quotient(l, lj)));
        PolyGF2 r = detail::reduce_full(std::move(s), basis, order);
        if (r.is_zero()) continue;
        size_t k = basis.size();
        basis.push_back(detail::make_rule(r, order));
        for (size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
    }
    /* inter-reduce to the unique reduced basis */
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<ReductionRule> others;
            others.reserve(basis.size() - 1);
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            PolyGF2 r = detail::reduce_full(basis[i].poly(), others, order);
            if (r == basis[i].poly()) continue;
            changed = true;
            basis.erase(basis.begin() + static_cast<long>(i));
            if (!r.is_zero()) basis.push_back(detail::make_rule(r, order));
            break;
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const ReductionRule& a, const ReductionRule& b) {
        return order.less(a.lead, b.lead);
    });
    return GroebnerBasis(gens, std::move(order), std::move(basis), degree_guard);
}

inline GroebnerBasis buchberger(const AlgebraPresentation& A, MonomialOrder order,
                                long long degree_guard = kDefaultDegreeGuard) {
    return buchberger(A.generators, A.relations, std::move(order), degree_guard);
}

inline GroebnerBasis buchberger(const AlgebraPresentation& A,
                                long long degree_guard = kDefaultDegreeGuard) {
    return buchberger(A, MonomialOrder::grevlex(A.nvars()), degree_guard);
}

/* Confluence certificate: every S-polynomial of the stored rules reduces to
 * zero and no rule is reducible by the others. */
inline bool verify_confluence(const GroebnerBasis& G) {
    const auto& rules = G.rules();
    for (size_t i = 0; i < rules.size(); ++i) {
        for (const Monomial& t : rules[i].tail.terms())
            if (G.reducible(t)) return false;
        for (size_t j = i + 1; j < rules.size(); ++j) {
            if (divides(rules[i].lead, rules[j].lead) || divides(rules[j].lead, rules[i].lead))
                return false;
            PolyGF2 s = s_polynomial(rules[i].poly(), rules[j].poly(), G.order(), G.gens());
            if (!normal_form(G, s).is_zero()) return false;
        }
    }
    return true;
}

} // namespace steenq
