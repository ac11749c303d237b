#pragma once

/* Milnor primitives Q_m.
 *
 * Definitional form: Q_0 = Sq^1 and
 *     Q_m = Sq^{2^m} Q_{m-1} + Q_{m-1} Sq^{2^m},
 * raising degree by 2^{m+1} - 1. q_recursive evaluates that recursion
 * literally and serves as the oracle. Q_m is a derivation, so the
 * production path (MilnorOps::q_derivation) computes Q_m once per
 * generator via the recursion, caches the values, and extends to
 * monomials by the Leibniz rule; over GF(2) only odd exponents
 * contribute.
 *
 * Over Z/2[w2, w3] with the Wu action the operations collapse onto
 * Q_1 and Q_0:
 *     (f_{m,1} f_{m,0}) = (1 0) * A_m,
 *     A_m = F_m F_{m-1} ... F_2,  F_k = [[w2^{2^{k-1}}, w3^{2^{k-1}}], [1, 0]],
 * so Q_m x = f_{m,1} Q_1 x + f_{m,0} Q_0 x for m >= 2. The entries lie in
 * the subring generated by w2^2 and w3^2; g_poly(m) is the exact quotient
 * f_{m,0} / w3^2, and Q_m Q_1 w2 = g_m w3^4.
 */

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "builtins.hpp"
#include "presentation.hpp"

namespace steenq {

inline constexpr int kDefaultMaxM = 12;

inline void check_milnor_index(int m, int max_m) {
    if (m < 0) throw AlgebraError("Q index must be nonnegative");
    if (m > max_m)
        throw BoundError("Q_" + std::to_string(m) + " exceeds configured bound m <= " +
                         std::to_string(max_m));
}

/* Literal recursion on a homogeneous polynomial. */
inline PolyGF2 q_recursive(const AlgebraPresentation& A, int m, const PolyGF2& p,
                           int max_m = kDefaultMaxM) {
    check_milnor_index(m, max_m);
    if (p.is_zero()) return p;
    if (!is_homogeneous(p)) throw AlgebraError("q_recursive: polynomial is not homogeneous");
    DegreeCapGuard guard(*degree(p) + (2ll << m));
    SteenrodEngine engine(A);
    struct Rec {
        SteenrodEngine& e;
        PolyGF2 operator()(int m, const PolyGF2& p) {
            if (p.is_zero()) return p;
            if (m == 0) return e.sq(1, p);
            long long s = 1ll << m;
            return add(e.sq(s, (*this)(m - 1, p)), (*this)(m - 1, e.sq(s, p)));
        }
    } rec{engine};
    return rec(m, p);
}

/* Cached Leibniz evaluation over one presentation. Generator values are
 * computed by q_recursive on first use; the cache is mutex-guarded. */
class MilnorOps {
public:
    explicit MilnorOps(AlgebraPresentation A, int max_m = kDefaultMaxM)
        : A_(std::move(A)), max_m_(max_m) {
        if (!A_.has_sq())
            throw AlgebraError(A_.name + ": algebra carries no Steenrod action");
        cache_.resize(A_.nvars());
    }

    const AlgebraPresentation& algebra() const { return A_; }
    int max_m() const { return max_m_; }

    PolyGF2 q_generator(int m, size_t gen) {
        check_milnor_index(m, max_m_);
        if (gen >= A_.nvars()) throw AlgebraError("q_generator: no such generator");
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_[gen].find(m);
            if (it != cache_[gen].end()) return it->second;
        }
        PolyGF2 value = q_recursive(A_, m, A_.gen_poly(gen), max_m_);
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_[gen].emplace(m, std::move(value)).first->second;
    }

    PolyGF2 q_derivation(int m, const PolyGF2& p) {
        check_milnor_index(m, max_m_);
        if (p.is_zero()) return p;
        require_same_arity(p.nvars(), A_.nvars(), "q_derivation");
        long long max_deg = 0;
        for (const Monomial& t : p.terms()) max_deg = std::max(max_deg, t.degree());
        DegreeCapGuard guard(max_deg + (2ll << m));
        PolyGF2 out = PolyGF2::zero(p.nvars());
        for (const Monomial& t : p.terms()) {
            /* Leibniz: only generators with odd exponent contribute */
            for (size_t j = 0; j < t.nvars(); ++j) {
                if (t.exp(j) % 2 == 0) continue;
                PolyGF2 qg = q_generator(m, j);
                if (qg.is_zero()) continue;
                std::vector<uint32_t> rest = t.exps();
                rest[j] -= 1;
                Monomial cofactor(std::move(rest), A_.generators);
                out = add(out, mul(qg, cofactor));
            }
        }
        return out;
    }

private:
    AlgebraPresentation A_;
    int max_m_;
    std::vector<std::map<int, PolyGF2>> cache_;
    std::mutex mutex_;
};

inline PolyGF2 q_derivation(const AlgebraPresentation& A, int m, const PolyGF2& p,
                            int max_m = kDefaultMaxM) {
    MilnorOps ops(A, max_m);
    return ops.q_derivation(m, p);
}

struct PolyMatrix2x2 {
    PolyGF2 a11, a12, a21, a22;
};

inline PolyMatrix2x2 mul(const PolyMatrix2x2& x, const PolyMatrix2x2& y) {
    return {add(mul(x.a11, y.a11), mul(x.a12, y.a21)),
            add(mul(x.a11, y.a12), mul(x.a12, y.a22)),
            add(mul(x.a21, y.a11), mul(x.a22, y.a21)),
            add(mul(x.a21, y.a12), mul(x.a22, y.a22))};
}

namespace detail {

/* F_k over BSO3. */
inline PolyMatrix2x2 a_factor(int k) {
    const AlgebraPresentation& bso3 = builtins().bso3;
    uint32_t half = static_cast<uint32_t>(k - 1);
    return {frobenius(bso3.gen_poly(0), half), frobenius(bso3.gen_poly(1), half),
            PolyGF2::one(2), PolyGF2::zero(2)};
}

} // namespace detail

/* A_m over BSO3, memoized incrementally: a_matrix(m) = F_m * a_matrix(m-1). */
inline PolyMatrix2x2 a_matrix(int m, int max_m = kDefaultMaxM) {
    if (m < 2) throw AlgebraError("a_matrix is defined for m >= 2");
    check_milnor_index(m, max_m);
    static std::mutex mutex;
    static std::vector<PolyMatrix2x2> cache; /* cache[k] = A_{k+2} */
    std::lock_guard<std::mutex> lock(mutex);
    DegreeCapGuard guard(2ll << m);
    if (cache.empty()) cache.push_back(detail::a_factor(2));
    while (cache.size() < static_cast<size_t>(m - 1))
        cache.push_back(mul(detail::a_factor(static_cast<int>(cache.size()) + 2), cache.back()));
    return cache[static_cast<size_t>(m - 2)];
}

/* (f_{m,1}, f_{m,0}): the top row of A_m. */
inline std::pair<PolyGF2, PolyGF2> f_polys(int m, int max_m = kDefaultMaxM) {
    PolyMatrix2x2 A = a_matrix(m, max_m);
    return {A.a11, A.a12};
}

/* g_m with f_{m,0} = g_m w3^2; construction is checked against the identity
 * Q_m Q_1 w2 = g_m w3^4 and the evenness of every exponent. */
inline PolyGF2 g_poly(int m, int max_m = kDefaultMaxM) {
    const AlgebraPresentation& bso3 = builtins().bso3;
    DegreeCapGuard guard(2ll << (m + 1));
    auto [f1, f0] = f_polys(m, max_m);
    (void)f1;
    Monomial w3sq = mul(bso3.gen_monomial(1), bso3.gen_monomial(1));
    auto g = divide_exact(f0, w3sq);
    if (!g) throw AlgebraError("g_poly: f_{m,0} is not divisible by w3^2");
    for (const Monomial& t : g->terms())
        for (size_t i = 0; i < t.nvars(); ++i)
            if (t.exp(i) % 2 != 0)
                throw AlgebraError("g_poly: quotient has an odd exponent");
    MilnorOps ops(bso3, max_m);
    PolyGF2 q1w2 = ops.q_derivation(1, bso3.gen_poly(0));
    PolyGF2 lhs = ops.q_derivation(m, q1w2);
    PolyGF2 w3p4 = frobenius(bso3.gen_poly(1), 2);
    if (lhs != mul(*g, w3p4))
        throw AlgebraError("g_poly: Q_m Q_1 w2 != g_m w3^4");
    return *g;
}

/* D_m x = Q_m x + r(w2)^{2^{m-1}} Q_{m-1} x + r(w3)^{2^{m-1}} Q_{m-2} x over
 * the target of the restriction r; defined for m >= 2. */
inline PolyGF2 d_operator(MilnorOps& ops, const RingHom& restriction, int m, const PolyGF2& p,
                          int max_m = kDefaultMaxM) {
    if (m < 2) throw AlgebraError("d_operator is defined for m >= 2");
    check_milnor_index(m, max_m);
    if (p.is_zero()) return p;
    long long max_deg = 0;
    for (const Monomial& t : p.terms()) max_deg = std::max(max_deg, t.degree());
    DegreeCapGuard guard(max_deg + (2ll << m));
    const AlgebraPresentation& src = restriction.source;
    uint32_t half = static_cast<uint32_t>(m - 1);
    PolyGF2 c2 = frobenius(apply_hom(restriction, src.gen_poly(0)), half);
    PolyGF2 c3 = frobenius(apply_hom(restriction, src.gen_poly(1)), half);
    PolyGF2 out = ops.q_derivation(m, p);
    out = add(out, mul(c2, ops.q_derivation(m - 1, p)));
    out = add(out, mul(c3, ops.q_derivation(m - 2, p)));
    return out;
}

/* Convenience form over the built-in restriction BSO3 -> BZ2xBZ2. */
inline PolyGF2 d_operator(int m, const PolyGF2& p, int max_m = kDefaultMaxM) {
    MilnorOps ops(builtins().bz2xbz2, max_m);
    return d_operator(ops, builtins().b_iota, m, p, max_m);
}

} // namespace steenq
