#pragma once

/* Rational Poincare series over the integers.
 *
 * A RationalSeries is a pair of dense coefficient vectors num/den indexed by
 * degree. expand() runs the integer division recurrence out to a requested
 * degree and insists every step divides exactly, so a series whose expansion
 * is claimed to be a dimension count can never silently round.
 *
 * parse_series reads the usual compact notation, e.g.
 *     (1-t^5)(1-t^9)/((1-t^2)^2(1-t^3)^2)
 * with one top-level '/', juxtaposition or '*' for products, and '^' for
 * powers of parenthesized groups, 't', or integers.
 */

#include <cctype>
#include <string>
#include <vector>

#include "poly.hpp"

namespace steenq {

struct RationalSeries {
    std::vector<long long> num{1};
    std::vector<long long> den{1};
};

namespace detail {

inline std::vector<long long> zpoly_mul(const std::vector<long long>& a,
                                        const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline std::vector<long long> zpoly_addsub(std::vector<long long> a,
                                           const std::vector<long long>& b, long long sign) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
    return a;
}

inline std::vector<long long> zpoly_pow(std::vector<long long> base, uint32_t k) {
    std::vector<long long> out{1};
    for (; k > 0; k >>= 1) {
        if (k & 1) out = zpoly_mul(out, base);
        if (k > 1) base = zpoly_mul(base, base);
    }
    return out;
}

/* Recursive-descent reader for series text. */
class SeriesParser {
public:
    explicit SeriesParser(const std::string& text) : text_(text) {}

    RationalSeries parse() {
        RationalSeries out;
        out.num = read_sum();
        skip_ws();
        if (!done() && text_[pos_] == '/') {
            ++pos_;
            out.den = read_sum();
            skip_ws();
        } else {
            out.den = {1};
        }
        if (!done()) fail("unexpected trailing input");
        return out;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    bool done() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool starts_factor() {
        skip_ws();
        if (done()) return false;
        char c = text_[pos_];
        return c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
    }

    std::vector<long long> read_sum() {
        skip_ws();
        long long sign = 1;
        if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') sign = -1;
            ++pos_;
        }
        std::vector<long long> acc = zpoly_mul(read_product(), {sign});
        for (;;) {
            skip_ws();
            if (done() || (text_[pos_] != '+' && text_[pos_] != '-')) return acc;
            sign = text_[pos_] == '+' ? 1 : -1;
            ++pos_;
            acc = zpoly_addsub(std::move(acc), read_product(), sign);
        }
    }

    std::vector<long long> read_product() {
        std::vector<long long> acc = read_factor();
        for (;;) {
            skip_ws();
            if (!done() && text_[pos_] == '*') {
                ++pos_;
                acc = zpoly_mul(acc, read_factor());
            } else if (starts_factor()) {
                acc = zpoly_mul(acc, read_factor());
            } else {
                return acc;
            }
        }
    }

    std::vector<long long> read_factor() {
        std::vector<long long> base = read_atom();
        skip_ws();
        if (!done() && text_[pos_] == '^') {
            ++pos_;
            return zpoly_pow(std::move(base), read_nat());
        }
        return base;
    }

    std::vector<long long> read_atom() {
        skip_ws();
        if (done()) fail("expected a series atom");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            std::vector<long long> inner = read_sum();
            skip_ws();
            if (done() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 't') {
            ++pos_;
            return {0, 1};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return {static_cast<long long>(read_nat())};
        fail("expected a series atom");
    }

    uint32_t read_nat() {
        skip_ws();
        if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        uint64_t v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<uint64_t>(text_[pos_] - '0');
            if (v > UINT32_MAX) fail("number out of range");
            ++pos_;
        }
        return static_cast<uint32_t>(v);
    }
};

} // namespace detail

inline RationalSeries parse_series(const std::string& text) {
    return detail::SeriesParser(text).parse();
}

/* Taylor coefficients of num/den for degrees 0..max_degree. The recurrence
 * den[0] c[n] = num[n] - sum_{k>=1} den[k] c[n-k] must divide exactly at
 * every step. */
inline std::vector<long long> expand(const RationalSeries& s, long long max_degree) {
    if (max_degree < 0) throw AlgebraError("expand: negative degree");
    if (s.den.empty() || s.den[0] == 0)
        throw AlgebraError("expand: denominator has no constant term");
    std::vector<long long> c(static_cast<size_t>(max_degree) + 1, 0);
    for (size_t n = 0; n < c.size(); ++n) {
        long long acc = n < s.num.size() ? s.num[n] : 0;
        for (size_t k = 1; k < s.den.size() && k <= n; ++k) acc -= s.den[k] * c[n - k];
        if (acc % s.den[0] != 0) throw AlgebraError("expand: series is not integral");
        c[n] = acc / s.den[0];
    }
    return c;
}

/* 1 / prod (1 - t^{deg g}) for a free graded polynomial algebra. */
inline RationalSeries free_series(const GenList& gens) {
    RationalSeries out;
    for (const GeneratorInfo& g : gens) {
        std::vector<long long> factor(static_cast<size_t>(g.degree) + 1, 0);
        factor[0] = 1;
        factor.back() -= 1;
        out.den = detail::zpoly_mul(out.den, factor);
    }
    return out;
}

/* prod (1 - t^{e_j}) / prod (1 - t^{deg g}): the series of a quotient by a
 * regular sequence of relations in degrees e_j. */
inline RationalSeries quotient_series(const GenList& gens,
                                      const std::vector<long long>& relation_degrees) {
    RationalSeries out = free_series(gens);
    for (long long e : relation_degrees) {
        if (e < 1) throw AlgebraError("quotient_series: relation degree must be positive");
        std::vector<long long> factor(static_cast<size_t>(e) + 1, 0);
        factor[0] = 1;
        factor.back() -= 1;
        out.num = detail::zpoly_mul(out.num, factor);
    }
    return out;
}

} // namespace steenq
