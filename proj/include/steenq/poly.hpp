#pragma once

/* Sparse multivariate polynomials over GF(2).
 *
 * A polynomial is a finite set of monomials; addition is symmetric
 * difference, so p + p = 0 and (p + q)^2 = p^2 + q^2 hold by construction.
 * Terms are kept strictly descending under a fixed graded reverse
 * lexicographic order so that equality is representation equality and
 * addition is a linear merge.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace steenq {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/* Semantic misuse: arity mismatches, invalid presentations, bad arguments. */
class AlgebraError : public std::runtime_error {
public:
    explicit AlgebraError(const std::string& msg) : std::runtime_error(msg) {}
};

/* A configured resource bound was exceeded (degree cap, completion guard). */
class BoundError : public std::runtime_error {
public:
    explicit BoundError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GeneratorInfo {
    std::string name;
    int degree = 1;
    int weight = 0;
};

using GenList = std::vector<GeneratorInfo>;

/* Degree cap: any operation that would produce a monomial of total degree
 * above the cap throws BoundError instead of running away. The cap is
 * per-thread; code that knows its target degree in advance raises it
 * locally with DegreeCapGuard. */
inline long long& degree_cap() {
    thread_local long long cap = 512;
    return cap;
}

class DegreeCapGuard {
public:
    explicit DegreeCapGuard(long long at_least) : saved_(degree_cap()) {
        if (at_least > saved_) degree_cap() = at_least;
    }
    ~DegreeCapGuard() { degree_cap() = saved_; }
    DegreeCapGuard(const DegreeCapGuard&) = delete;
    DegreeCapGuard& operator=(const DegreeCapGuard&) = delete;

private:
    long long saved_;
};

/* Monomial over a fixed ordered generator list. Total degree and weight are
 * cached at construction and maintained additively; they always equal the
 * weighted sums over the exponent vector. */
class Monomial {
public:
    Monomial() = default;

    static Monomial unit(size_t nvars) {
        Monomial m;
        m.exp_.assign(nvars, 0);
        return m;
    }

    Monomial(std::vector<uint32_t> exps, const GenList& gens)
        : exp_(std::move(exps)) {
        if (exp_.size() != gens.size())
            throw AlgebraError("exponent vector arity " + std::to_string(exp_.size()) +
                               " does not match generator count " + std::to_string(gens.size()));
        for (size_t i = 0; i < exp_.size(); ++i) {
            degree_ += static_cast<long long>(exp_[i]) * gens[i].degree;
            weight_ += static_cast<long long>(exp_[i]) * gens[i].weight;
        }
        check_cap(degree_);
    }

    /* Trusted constructor: caches supplied by the caller. */
    Monomial(std::vector<uint32_t> exps, long long degree, long long weight)
        : exp_(std::move(exps)), degree_(degree), weight_(weight) {
        check_cap(degree_);
    }

    size_t nvars() const { return exp_.size(); }
    uint32_t exp(size_t i) const { return exp_[i]; }
    const std::vector<uint32_t>& exps() const { return exp_; }
    long long degree() const { return degree_; }
    long long weight() const { return weight_; }
    bool is_unit() const { return degree_ == 0 && weight_ == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    static void check_cap(long long degree) {
        if (degree > degree_cap())
            throw BoundError("monomial degree " + std::to_string(degree) +
                             " exceeds configured cap " + std::to_string(degree_cap()));
    }

private:
    std::vector<uint32_t> exp_;
    long long degree_ = 0;
    long long weight_ = 0;
};

inline void require_same_arity(size_t a, size_t b, const char* what) {
    if (a != b)
        throw AlgebraError(std::string(what) + ": mismatched presentations (arity " +
                           std::to_string(a) + " vs " + std::to_string(b) + ")");
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
    require_same_arity(a.nvars(), b.nvars(), "mul");
    std::vector<uint32_t> e(a.nvars());
    for (size_t i = 0; i < e.size(); ++i) {
        uint64_t s = static_cast<uint64_t>(a.exp(i)) + b.exp(i);
        if (s > UINT32_MAX) throw BoundError("exponent overflow");
        e[i] = static_cast<uint32_t>(s);
    }
    return Monomial(std::move(e), a.degree() + b.degree(), a.weight() + b.weight());
}

/* Does a divide b componentwise? */
inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) return false;
    for (size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > b.exp(i)) return false;
    return true;
}

/* b / a; requires divides(a, b). */
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    std::vector<uint32_t> e(b.nvars());
    for (size_t i = 0; i < e.size(); ++i) {
        if (a.exp(i) > b.exp(i)) throw AlgebraError("quotient: not divisible");
        e[i] = b.exp(i) - a.exp(i);
    }
    return Monomial(std::move(e), b.degree() - a.degree(), b.weight() - a.weight());
}

inline Monomial lcm(const Monomial& a, const Monomial& b, const GenList& gens) {
    require_same_arity(a.nvars(), b.nvars(), "lcm");
    std::vector<uint32_t> e(a.nvars());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e), gens);
}

/* Canonical internal order: total degree, ties broken reverse
 * lexicographically in declaration order. */
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.nvars(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i);
    }
    return false;
}

inline bool grevlex_greater(const Monomial& a, const Monomial& b) { return grevlex_less(b, a); }

class PolyGF2 {
public:
    PolyGF2() = default;

    static PolyGF2 zero(size_t nvars) {
        PolyGF2 p;
        p.nvars_ = nvars;
        return p;
    }

    static PolyGF2 one(size_t nvars) { return from_monomial(Monomial::unit(nvars)); }

    static PolyGF2 from_monomial(Monomial m) {
        PolyGF2 p;
        p.nvars_ = m.nvars();
        p.terms_.push_back(std::move(m));
        return p;
    }

    /* Builds from an arbitrary term list; equal pairs cancel mod 2. */
    static PolyGF2 from_terms(size_t nvars, std::vector<Monomial> terms) {
        std::sort(terms.begin(), terms.end(), grevlex_greater);
        std::vector<Monomial> out;
        out.reserve(terms.size());
        for (size_t i = 0; i < terms.size();) {
            size_t j = i;
            while (j < terms.size() && terms[j] == terms[i]) ++j;
            if ((j - i) % 2 == 1) out.push_back(terms[i]);
            i = j;
        }
        PolyGF2 p;
        p.nvars_ = nvars;
        p.terms_ = std::move(out);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t nvars() const { return nvars_; }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    /* Largest term under the canonical order. */
    const Monomial& leading() const {
        if (terms_.empty()) throw AlgebraError("leading term of zero polynomial");
        return terms_.front();
    }

    friend bool operator==(const PolyGF2& a, const PolyGF2& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PolyGF2& a, const PolyGF2& b) { return !(a == b); }

private:
    size_t nvars_ = 0;
    std::vector<Monomial> terms_;
};

inline PolyGF2 add(const PolyGF2& a, const PolyGF2& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    require_same_arity(a.nvars(), b.nvars(), "add");
    std::vector<Monomial> out;
    out.reserve(a.term_count() + b.term_count());
    std::set_symmetric_difference(a.terms().begin(), a.terms().end(), b.terms().begin(),
                                  b.terms().end(), std::back_inserter(out), grevlex_greater);
    return PolyGF2::from_terms(a.nvars(), std::move(out));
}

inline PolyGF2 mul(const PolyGF2& p, const Monomial& m) {
    if (p.is_zero()) return p;
    require_same_arity(p.nvars(), m.nvars(), "mul");
    std::vector<Monomial> out;
    out.reserve(p.term_count());
    for (const Monomial& t : p.terms()) out.push_back(mul(t, m));
    /* multiplication by a fixed monomial preserves the term order */
    PolyGF2 q = PolyGF2::from_terms(p.nvars(), std::move(out));
    return q;
}

inline PolyGF2 mul(const PolyGF2& a, const PolyGF2& b) {
    if (a.is_zero() || b.is_zero()) return PolyGF2::zero(a.is_zero() ? a.nvars() : b.nvars());
    require_same_arity(a.nvars(), b.nvars(), "mul");
    std::vector<Monomial> out;
    out.reserve(a.term_count() * b.term_count());
    for (const Monomial& s : a.terms())
        for (const Monomial& t : b.terms()) out.push_back(mul(s, t));
    return PolyGF2::from_terms(a.nvars(), std::move(out));
}

inline PolyGF2 operator+(const PolyGF2& a, const PolyGF2& b) { return add(a, b); }
inline PolyGF2 operator*(const PolyGF2& a, const PolyGF2& b) { return mul(a, b); }

/* p^(2^k): the Frobenius in characteristic 2 scales every exponent. */
inline PolyGF2 frobenius(const PolyGF2& p, uint32_t k = 1) {
    if (k == 0 || p.is_zero()) return p;
    std::vector<Monomial> out;
    out.reserve(p.term_count());
    for (const Monomial& t : p.terms()) {
        std::vector<uint32_t> e(t.nvars());
        for (size_t i = 0; i < e.size(); ++i) {
            uint64_t scaled = static_cast<uint64_t>(t.exp(i)) << k;
            if (scaled > UINT32_MAX) throw BoundError("exponent overflow in frobenius");
            e[i] = static_cast<uint32_t>(scaled);
        }
        out.emplace_back(std::move(e), t.degree() << k, t.weight() << k);
    }
    return PolyGF2::from_terms(p.nvars(), std::move(out));
}

inline PolyGF2 pow(const PolyGF2& base, uint64_t e) {
    if (e == 0) return PolyGF2::one(base.nvars());
    PolyGF2 acc = PolyGF2::one(base.nvars());
    PolyGF2 sq = base;
    while (true) {
        if (e & 1) acc = mul(acc, sq);
        e >>= 1;
        if (e == 0) break;
        sq = frobenius(sq); /* squaring is linear over GF(2) */
    }
    return acc;
}

/* Common degree of a homogeneous polynomial; nullopt for zero. Throws on an
 * inhomogeneous argument. */
inline std::optional<long long> degree(const PolyGF2& p) {
    if (p.is_zero()) return std::nullopt;
    long long d = p.terms().front().degree();
    for (const Monomial& t : p.terms())
        if (t.degree() != d) throw AlgebraError("degree of inhomogeneous polynomial");
    return d;
}

inline bool is_homogeneous(const PolyGF2& p) {
    if (p.is_zero()) return true;
    long long d = p.terms().front().degree();
    for (const Monomial& t : p.terms())
        if (t.degree() != d) return false;
    return true;
}

inline bool is_weight_homogeneous(const PolyGF2& p) {
    if (p.is_zero()) return true;
    long long w = p.terms().front().weight();
    for (const Monomial& t : p.terms())
        if (t.weight() != w) return false;
    return true;
}

/* Splits p into weight-homogeneous components, keyed by weight. */
inline std::vector<std::pair<long long, PolyGF2>> weight_components(const PolyGF2& p) {
    std::vector<std::pair<long long, std::vector<Monomial>>> buckets;
    for (const Monomial& t : p.terms()) {
        auto it = std::find_if(buckets.begin(), buckets.end(),
                               [&](const auto& b) { return b.first == t.weight(); });
        if (it == buckets.end()) {
            buckets.push_back({t.weight(), {t}});
        } else {
            it->second.push_back(t);
        }
    }
    std::sort(buckets.begin(), buckets.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<long long, PolyGF2>> out;
    for (auto& [w, terms] : buckets)
        out.push_back({w, PolyGF2::from_terms(p.nvars(), std::move(terms))});
    return out;
}

/* Exact division by a monomial: nullopt unless m divides every term. */
inline std::optional<PolyGF2> divide_exact(const PolyGF2& p, const Monomial& m) {
    if (p.is_zero()) return p;
    require_same_arity(p.nvars(), m.nvars(), "divide_exact");
    std::vector<Monomial> out;
    out.reserve(p.term_count());
    for (const Monomial& t : p.terms()) {
        if (!divides(m, t)) return std::nullopt;
        out.push_back(quotient(t, m));
    }
    return PolyGF2::from_terms(p.nvars(), std::move(out));
}

/* All monomials of exact total degree d over the given generators, in a
 * deterministic (descending canonical) order. */
inline std::vector<Monomial> monomials_of_degree(const GenList& gens, long long d) {
    std::vector<Monomial> out;
    std::vector<uint32_t> e(gens.size(), 0);
    std::function<void(size_t, long long)> rec = [&](size_t i, long long rem) {
        if (i == gens.size()) {
            if (rem == 0) out.push_back(Monomial(e, gens));
            return;
        }
        if (i + 1 == gens.size()) {
            int dg = gens[i].degree;
            if (rem % dg == 0 && rem / dg <= UINT32_MAX) {
                e[i] = static_cast<uint32_t>(rem / dg);
                out.push_back(Monomial(e, gens));
                e[i] = 0;
            }
            return;
        }
        int dg = gens[i].degree;
        for (long long k = 0; k * dg <= rem; ++k) {
            e[i] = static_cast<uint32_t>(k);
            rec(i + 1, rem - k * dg);
            e[i] = 0;
        }
    };
    if (d >= 0) rec(0, d);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

} // namespace steenq
