#pragma once

/* Graded polynomial algebra presentations over GF(2) and ring homomorphisms
 * between them.
 *
 * A presentation lists generators with degrees and auxiliary weights, an
 * optional Steenrod table (Sq^i of each generator for i = 0..deg), and a
 * list of homogeneous relations. The Steenrod action on products follows
 * the Cartan formula; on squares it halves, Sq^i(q^2) = (Sq^{i/2} q)^2 for
 * even i and 0 otherwise, which keeps large powers cheap.
 */

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "poly.hpp"
#include "text.hpp"

namespace steenq {

struct AlgebraPresentation {
    std::string name;
    GenList generators;
    /* sq_table[g][i] = Sq^i(generator g), i = 0..degree(g). Absent when the
     * algebra carries no Steenrod action. */
    std::optional<std::vector<std::vector<PolyGF2>>> sq_table;
    std::vector<PolyGF2> relations;

    size_t nvars() const { return generators.size(); }
    bool has_sq() const { return sq_table.has_value(); }

    std::optional<size_t> generator_index(std::string_view gen_name) const {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == gen_name) return i;
        return std::nullopt;
    }

    Monomial gen_monomial(size_t i) const {
        std::vector<uint32_t> e(nvars(), 0);
        e[i] = 1;
        return Monomial(std::move(e), generators);
    }

    PolyGF2 gen_poly(size_t i) const { return PolyGF2::from_monomial(gen_monomial(i)); }
};

inline void validate(const AlgebraPresentation& A) {
    if (A.generators.empty()) throw AlgebraError(A.name + ": presentation has no generators");
    for (size_t i = 0; i < A.generators.size(); ++i) {
        const GeneratorInfo& g = A.generators[i];
        if (g.name.empty() || !detail::is_name_start(g.name[0]))
            throw AlgebraError(A.name + ": invalid generator name '" + g.name + "'");
        for (char c : g.name)
            if (!detail::is_name_char(c))
                throw AlgebraError(A.name + ": invalid generator name '" + g.name + "'");
        if (g.degree < 1)
            throw AlgebraError(A.name + ": generator " + g.name + " has degree < 1");
        if (g.weight < 0)
            throw AlgebraError(A.name + ": generator " + g.name + " has negative weight");
        for (size_t j = i + 1; j < A.generators.size(); ++j)
            if (A.generators[j].name == g.name)
                throw AlgebraError(A.name + ": duplicate generator name '" + g.name + "'");
    }
    if (A.sq_table) {
        if (A.sq_table->size() != A.nvars())
            throw AlgebraError(A.name + ": Steenrod table size does not match generator count");
        for (size_t g = 0; g < A.nvars(); ++g) {
            const auto& row = (*A.sq_table)[g];
            int dg = A.generators[g].degree;
            const std::string& gname = A.generators[g].name;
            if (row.size() != static_cast<size_t>(dg) + 1)
                throw AlgebraError(A.name + ": Steenrod entries for " + gname +
                                   " must cover i = 0.." + std::to_string(dg));
            if (row[0] != A.gen_poly(g))
                throw AlgebraError(A.name + ": Sq^0 " + gname + " must equal " + gname);
            if (row[static_cast<size_t>(dg)] != frobenius(A.gen_poly(g)))
                throw AlgebraError(A.name + ": Sq^" + std::to_string(dg) + " " + gname +
                                   " must equal " + gname + "^2 (instability)");
            for (size_t i = 0; i < row.size(); ++i) {
                if (row[i].is_zero()) continue;
                if (row[i].nvars() != A.nvars())
                    throw AlgebraError(A.name + ": Steenrod entry arity mismatch for " + gname);
                auto d = degree(row[i]);
                if (!is_homogeneous(row[i]) || !d || *d != dg + static_cast<long long>(i))
                    throw AlgebraError(A.name + ": Sq^" + std::to_string(i) + " " + gname +
                                       " is not homogeneous of degree " +
                                       std::to_string(dg + i));
            }
        }
    }
    for (const PolyGF2& r : A.relations) {
        if (r.is_zero()) throw AlgebraError(A.name + ": zero relation");
        if (r.nvars() != A.nvars()) throw AlgebraError(A.name + ": relation arity mismatch");
        if (!is_homogeneous(r))
            throw AlgebraError(A.name + ": relation is not degree-homogeneous");
        if (!is_weight_homogeneous(r))
            throw AlgebraError(A.name + ": relation is not weight-homogeneous");
    }
}

inline AlgebraPresentation free_ambient(const AlgebraPresentation& A) {
    AlgebraPresentation F = A;
    F.relations.clear();
    return F;
}

namespace detail {

inline PolyGF2 embed_poly(const PolyGF2& p, size_t new_nvars, size_t offset) {
    if (p.is_zero()) return PolyGF2::zero(new_nvars);
    std::vector<Monomial> out;
    out.reserve(p.term_count());
    for (const Monomial& t : p.terms()) {
        std::vector<uint32_t> e(new_nvars, 0);
        for (size_t i = 0; i < t.nvars(); ++i) e[offset + i] = t.exp(i);
        out.emplace_back(std::move(e), t.degree(), t.weight());
    }
    return PolyGF2::from_terms(new_nvars, std::move(out));
}

} // namespace detail

/* Suffixes every generator name; structure is unchanged. */
inline AlgebraPresentation with_suffix(const AlgebraPresentation& A, std::string_view suffix) {
    AlgebraPresentation B = A;
    for (GeneratorInfo& g : B.generators) g.name += suffix;
    return B;
}

/* Tensor product as the disjoint union of generator lists; the Steenrod
 * action and relations act factorwise. Either both factors carry a
 * Steenrod table or neither does. */
inline AlgebraPresentation tensor(const AlgebraPresentation& A, const AlgebraPresentation& B,
                                  std::string name) {
    if (A.has_sq() != B.has_sq())
        throw AlgebraError("tensor: factors disagree on carrying a Steenrod action");
    AlgebraPresentation T;
    T.name = std::move(name);
    T.generators = A.generators;
    T.generators.insert(T.generators.end(), B.generators.begin(), B.generators.end());
    size_t n = T.generators.size();
    if (A.has_sq()) {
        std::vector<std::vector<PolyGF2>> table;
        for (const auto& row : *A.sq_table) {
            std::vector<PolyGF2> r;
            for (const PolyGF2& p : row) r.push_back(detail::embed_poly(p, n, 0));
            table.push_back(std::move(r));
        }
        for (const auto& row : *B.sq_table) {
            std::vector<PolyGF2> r;
            for (const PolyGF2& p : row) r.push_back(detail::embed_poly(p, n, A.nvars()));
            table.push_back(std::move(r));
        }
        T.sq_table = std::move(table);
    }
    for (const PolyGF2& r : A.relations) T.relations.push_back(detail::embed_poly(r, n, 0));
    for (const PolyGF2& r : B.relations)
        T.relations.push_back(detail::embed_poly(r, n, A.nvars()));
    validate(T);
    return T;
}

namespace detail {

struct SqKey {
    std::vector<uint32_t> exps;
    long long i;
    bool operator==(const SqKey& o) const { return i == o.i && exps == o.exps; }
};

struct SqKeyHash {
    size_t operator()(const SqKey& k) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(static_cast<uint64_t>(k.i));
        for (uint32_t e : k.exps) mix(e);
        return static_cast<size_t>(h);
    }
};

} // namespace detail

/* Computes Steenrod squares over one presentation. The memo table persists
 * across calls on the same engine; not safe for concurrent use. */
class SteenrodEngine {
public:
    explicit SteenrodEngine(AlgebraPresentation A) : A_(std::move(A)) {
        if (!A_.has_sq())
            throw AlgebraError(A_.name + ": algebra carries no Steenrod action");
    }

    const AlgebraPresentation& algebra() const { return A_; }

    PolyGF2 sq(long long i, const PolyGF2& p) {
        if (i < 0) throw AlgebraError("sq: negative index");
        if (p.is_zero()) return p;
        require_same_arity(p.nvars(), A_.nvars(), "sq");
        long long max_out = 0;
        for (const Monomial& t : p.terms()) max_out = std::max(max_out, t.degree() + i);
        DegreeCapGuard guard(max_out);
        PolyGF2 out = PolyGF2::zero(p.nvars());
        for (const Monomial& t : p.terms()) out = add(out, sq_mono(t, i));
        return out;
    }

    PolyGF2 total_sq(const PolyGF2& p) {
        if (p.is_zero()) return p;
        require_same_arity(p.nvars(), A_.nvars(), "total_sq");
        long long max_out = 0;
        for (const Monomial& t : p.terms()) max_out = std::max(max_out, 2 * t.degree());
        DegreeCapGuard guard(max_out);
        PolyGF2 out = PolyGF2::zero(p.nvars());
        for (const Monomial& t : p.terms())
            for (long long i = 0; i <= t.degree(); ++i) out = add(out, sq_mono(t, i));
        return out;
    }

private:
    PolyGF2 sq_mono(const Monomial& m, long long i) {
        if (i == 0) return PolyGF2::from_monomial(m);
        if (i > m.degree()) return PolyGF2::zero(m.nvars()); /* instability */
        detail::SqKey key{m.exps(), i};
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;

        /* split m = s * q^2 with s squarefree */
        std::vector<uint32_t> se(m.nvars()), qe(m.nvars());
        bool has_square = false;
        for (size_t j = 0; j < m.nvars(); ++j) {
            se[j] = m.exp(j) & 1;
            qe[j] = m.exp(j) >> 1;
            if (qe[j]) has_square = true;
        }
        PolyGF2 out;
        if (!has_square) {
            out = sq_squarefree(m, i);
        } else {
            Monomial s(std::move(se), A_.generators);
            Monomial q(std::move(qe), A_.generators);
            out = PolyGF2::zero(m.nvars());
            for (long long k = 0; k <= std::min<long long>(i, s.degree()); ++k) {
                if ((i - k) % 2 != 0) continue;
                PolyGF2 inner = sq_mono(q, (i - k) / 2);
                if (inner.is_zero()) continue;
                out = add(out, mul(frobenius(inner), sq_squarefree(s, k)));
            }
        }
        memo_.emplace(std::move(key), out);
        return out;
    }

    /* Cartan convolution across the distinct generators of a squarefree
     * monomial; dp is indexed by the excess already spent. */
    PolyGF2 sq_squarefree(const Monomial& s, long long i) {
        if (i == 0) return PolyGF2::from_monomial(s);
        if (i > s.degree()) return PolyGF2::zero(s.nvars());
        std::vector<PolyGF2> dp(static_cast<size_t>(i) + 1, PolyGF2::zero(s.nvars()));
        dp[0] = PolyGF2::one(s.nvars());
        for (size_t j = 0; j < s.nvars(); ++j) {
            if (s.exp(j) == 0) continue;
            const auto& row = (*A_.sq_table)[j];
            std::vector<PolyGF2> next(dp.size(), PolyGF2::zero(s.nvars()));
            for (size_t x = 0; x < dp.size(); ++x) {
                if (dp[x].is_zero()) continue;
                for (size_t c = 0; c < row.size() && x + c < next.size(); ++c) {
                    if (row[c].is_zero()) continue;
                    next[x + c] = add(next[x + c], mul(dp[x], row[c]));
                }
            }
            dp = std::move(next);
        }
        return dp[static_cast<size_t>(i)];
    }

    AlgebraPresentation A_;
    std::unordered_map<detail::SqKey, PolyGF2, detail::SqKeyHash> memo_;
};

inline PolyGF2 sq(const AlgebraPresentation& A, long long i, const PolyGF2& p) {
    SteenrodEngine engine(A);
    return engine.sq(i, p);
}

inline PolyGF2 total_sq(const AlgebraPresentation& A, const PolyGF2& p) {
    SteenrodEngine engine(A);
    return engine.total_sq(p);
}

/* Degree-preserving ring homomorphism given on generators. Carries copies of
 * both presentations so it stays valid on its own. */
struct RingHom {
    std::string name;
    AlgebraPresentation source;
    AlgebraPresentation target;
    std::vector<PolyGF2> images; /* indexed by source generator */
    bool weight_preserving = false;
};

inline void validate(const RingHom& f) {
    if (f.images.size() != f.source.nvars())
        throw AlgebraError(f.name + ": every generator needs an image");
    for (size_t g = 0; g < f.images.size(); ++g) {
        const GeneratorInfo& gen = f.source.generators[g];
        const PolyGF2& img = f.images[g];
        if (img.nvars() != f.target.nvars())
            throw AlgebraError(f.name + ": image arity mismatch for " + gen.name);
        if (img.is_zero()) continue;
        auto d = degree(img);
        if (!is_homogeneous(img) || *d != gen.degree)
            throw AlgebraError(f.name + ": image of " + gen.name +
                               " is not homogeneous of degree " + std::to_string(gen.degree));
        if (f.weight_preserving) {
            for (const Monomial& t : img.terms())
                if (t.weight() != gen.weight)
                    throw AlgebraError(f.name + ": image of " + gen.name +
                                       " does not preserve weight");
        }
    }
}

inline RingHom make_hom(std::string name, const AlgebraPresentation& source,
                        const AlgebraPresentation& target,
                        const std::vector<std::pair<std::string, std::string>>& images_text,
                        bool weight_preserving = false) {
    RingHom f;
    f.name = std::move(name);
    f.source = source;
    f.target = target;
    f.images.assign(source.nvars(), PolyGF2::zero(target.nvars()));
    std::vector<bool> seen(source.nvars(), false);
    for (const auto& [gen_name, image_text] : images_text) {
        auto gi = source.generator_index(gen_name);
        if (!gi) throw AlgebraError(f.name + ": unknown source generator " + gen_name);
        if (seen[*gi]) throw AlgebraError(f.name + ": duplicate image for " + gen_name);
        seen[*gi] = true;
        f.images[*gi] = parse_poly(image_text, target.generators);
    }
    for (size_t g = 0; g < source.nvars(); ++g)
        if (!seen[g])
            throw AlgebraError(f.name + ": generator " + source.generators[g].name +
                               " has no image");
    f.weight_preserving = weight_preserving;
    validate(f);
    return f;
}

inline PolyGF2 apply_hom(const RingHom& f, const PolyGF2& p) {
    if (f.images.size() != f.source.nvars())
        throw AlgebraError(f.name + ": every generator needs an image");
    if (p.is_zero()) return PolyGF2::zero(f.target.nvars());
    require_same_arity(p.nvars(), f.source.nvars(), "apply_hom");
    PolyGF2 out = PolyGF2::zero(f.target.nvars());
    for (const Monomial& t : p.terms()) {
        PolyGF2 prod = PolyGF2::one(f.target.nvars());
        for (size_t j = 0; j < t.nvars() && !prod.is_zero(); ++j) {
            if (t.exp(j) == 0) continue;
            prod = mul(prod, pow(f.images[j], t.exp(j)));
        }
        out = add(out, prod);
    }
    return out;
}

struct EquivarianceViolation {
    Monomial monomial;
    long long i = 0;
};

struct EquivarianceReport {
    bool ok = true;
    std::optional<EquivarianceViolation> first_violation;
    long long monomials_checked = 0;
};

/* Checks Sq^i(f(m)) == f(Sq^i(m)) for every source monomial of degree at
 * most max_degree and every 0 <= i <= deg(m). */
inline EquivarianceReport check_sq_equivariance(const RingHom& f, long long max_degree) {
    if (!f.source.has_sq() || !f.target.has_sq())
        throw AlgebraError(f.name + ": equivariance check needs Steenrod tables on both sides");
    SteenrodEngine src(f.source), tgt(f.target);
    EquivarianceReport report;
    DegreeCapGuard guard(2 * max_degree + 2);
    for (long long d = 1; d <= max_degree; ++d) {
        for (const Monomial& m : monomials_of_degree(f.source.generators, d)) {
            ++report.monomials_checked;
            PolyGF2 pm = PolyGF2::from_monomial(m);
            PolyGF2 image = apply_hom(f, pm);
            for (long long i = 0; i <= d; ++i) {
                if (tgt.sq(i, image) != apply_hom(f, src.sq(i, pm))) {
                    report.ok = false;
                    report.first_violation = EquivarianceViolation{m, i};
                    return report;
                }
            }
        }
    }
    return report;
}

} // namespace steenq
