#pragma once

/* Monomial orders for the quotient engine. Both orders compare total degree
 * first, so they are graded; ties are broken by the exponent vector read
 * through a configurable precedence permutation (precedence[0] is the
 * largest generator). Default precedence is declaration order.
 */

#include <numeric>
#include <vector>

#include "poly.hpp"

namespace steenq {

enum class OrderKind { GrevLex, GrLex };

struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<uint32_t> precedence; /* permutation of generator indices */

    static MonomialOrder grevlex(size_t nvars) { return with_kind(OrderKind::GrevLex, nvars); }
    static MonomialOrder grlex(size_t nvars) { return with_kind(OrderKind::GrLex, nvars); }

    static MonomialOrder with_kind(OrderKind kind, size_t nvars) {
        MonomialOrder o;
        o.kind = kind;
        o.precedence.resize(nvars);
        std::iota(o.precedence.begin(), o.precedence.end(), 0);
        return o;
    }

    void validate(size_t nvars) const {
        if (precedence.size() != nvars)
            throw AlgebraError("order precedence arity does not match generator count");
        std::vector<bool> seen(nvars, false);
        for (uint32_t i : precedence) {
            if (i >= nvars || seen[i]) throw AlgebraError("order precedence is not a permutation");
            seen[i] = true;
        }
    }

    bool less(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (kind == OrderKind::GrLex) {
            for (size_t k = 0; k < precedence.size(); ++k) {
                uint32_t i = precedence[k];
                if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
            }
            return false;
        }
        /* grevlex: last difference in precedence order decides, and the
         * smaller exponent there wins */
        for (size_t k = precedence.size(); k-- > 0;) {
            uint32_t i = precedence[k];
            if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i);
        }
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
    bool equal_rank(const Monomial& a, const Monomial& b) const {
        return !less(a, b) && !less(b, a);
    }

    /* Largest term of a nonzero polynomial under this order. */
    const Monomial& leading(const PolyGF2& p) const {
        if (p.is_zero()) throw AlgebraError("leading term of zero polynomial");
        const Monomial* best = &p.terms().front();
        for (const Monomial& t : p.terms())
            if (less(*best, t)) best = &t;
        return *best;
    }
};

} // namespace steenq
