#pragma once

/* Text form of polynomials.
 *
 * Grammar: a polynomial is `+`-separated terms; a term is `*`-separated
 * factors `name` or `name^k`; `0` is the zero polynomial and `1` the empty
 * monomial. Whitespace is insignificant. Generator names are identifiers
 * and may contain ASCII apostrophes (w2', w3'').
 *
 * Printing is canonical: terms descend under the graded reverse
 * lexicographic order, factors follow declaration order, exponent 1 is
 * bare. parse(print(p)) == p for every polynomial.
 */

#include <cctype>
#include <string>
#include <string_view>

#include "poly.hpp"

namespace steenq {

namespace detail {

inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class PolyLexer {
public:
    PolyLexer(std::string_view text, const GenList& gens) : text_(text), gens_(gens) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    size_t pos() const { return pos_; }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    uint32_t read_nat() {
        skip_ws();
        size_t start = pos_;
        uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<uint64_t>(text_[pos_] - '0');
            if (v > UINT32_MAX) throw ParseError("exponent too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return static_cast<uint32_t>(v);
    }

    size_t read_generator() {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= text_.size() || !is_name_start(text_[pos_]))
            throw ParseError("expected a generator name", pos_);
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return i;
        throw ParseError("unknown generator '" + std::string(name) + "'", start);
    }

private:
    std::string_view text_;
    const GenList& gens_;
    size_t pos_ = 0;
};

} // namespace detail

inline PolyGF2 parse_poly(std::string_view text, const GenList& gens) {
    detail::PolyLexer lx(text, gens);
    if (lx.at_end()) throw ParseError("empty polynomial", 0);

    std::vector<Monomial> terms;
    bool zero_seen = false;
    while (true) {
        if (lx.accept('0')) {
            /* `0` stands alone as a term */
            zero_seen = true;
        } else {
            std::vector<uint32_t> exps(gens.size(), 0);
            while (true) {
                if (lx.accept('1')) {
                    /* empty monomial factor, contributes nothing */
                } else {
                    size_t gi = lx.read_generator();
                    uint32_t k = 1;
                    if (lx.accept('^')) k = lx.read_nat();
                    uint64_t s = static_cast<uint64_t>(exps[gi]) + k;
                    if (s > UINT32_MAX) throw ParseError("exponent too large", lx.pos());
                    exps[gi] = static_cast<uint32_t>(s);
                }
                if (!lx.accept('*')) break;
            }
            terms.emplace_back(std::move(exps), gens);
        }
        if (!lx.accept('+')) break;
    }
    if (!lx.at_end()) throw ParseError("unexpected trailing input", lx.pos());
    if (zero_seen && terms.empty()) return PolyGF2::zero(gens.size());
    return PolyGF2::from_terms(gens.size(), std::move(terms));
}

inline std::string to_string(const Monomial& m, const GenList& gens) {
    if (m.nvars() != gens.size())
        throw AlgebraError("to_string: monomial arity does not match generator list");
    std::string out;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!out.empty()) out += '*';
        out += gens[i].name;
        if (m.exp(i) > 1) {
            out += '^';
            out += std::to_string(m.exp(i));
        }
    }
    if (out.empty()) out = "1";
    return out;
}

inline std::string to_string(const PolyGF2& p, const GenList& gens) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const Monomial& t : p.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(t, gens);
    }
    return out;
}

} // namespace steenq
