#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/presentation.hpp"

namespace skewpbw {

/// Exponent vector of a standard monomial x_1^{a_1}...x_n^{a_n}.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents &e) {
    unsigned s = 0;
    for (unsigned a : e)
        s += a;
    return s;
}

/// Graded-lex: degree first, then x_1-heavy monomials first within a degree.
struct MonomialOrder {
    bool operator()(const Exponents &a, const Exponents &b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db)
            return da < db;
        return a > b; // lex-descending exponent vector = x1^d before x2^d
    }
};

inline Word monomial_word(const Exponents &e) {
    Word w;
    for (size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k)
            w.push_back(static_cast<int>(i));
    return w;
}

inline Exponents word_exponents(const Word &w, int n) {
    Exponents e(n, 0);
    for (int g : w)
        ++e[g];
    return e;
}

constexpr int kDegMinusInfinity = -1;

/// K-linear combination of standard monomials in canonical form
/// (no zero coefficients; the empty map is zero).
class Element {
  public:
    using Terms = std::map<Exponents, FieldElement, MonomialOrder>;

    Element() = default;

    static Element zero() { return {}; }

    static Element scalar(const AlgebraPresentation &p, FieldElement c) {
        Element e;
        if (!c.is_zero())
            e.terms_.emplace(Exponents(p.num_generators(), 0), std::move(c));
        return e;
    }

    static Element one(const AlgebraPresentation &p) {
        return scalar(p, FieldElement::one(p.field));
    }

    static Element monomial(const AlgebraPresentation &p, Exponents e, FieldElement c) {
        Element r;
        if (!c.is_zero()) {
            e.resize(p.num_generators(), 0);
            r.terms_.emplace(std::move(e), std::move(c));
        }
        return r;
    }

    static Element generator(const AlgebraPresentation &p, int i) {
        Exponents e(p.num_generators(), 0);
        e[i] = 1;
        return monomial(p, std::move(e), FieldElement::one(p.field));
    }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    FieldElement coeff(const AlgebraPresentation &p, const Exponents &e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldElement::zero(p.field) : it->second;
    }

    void add_term(Exponents e, const FieldElement &c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.emplace(std::move(e), c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Element operator+(const Element &o) const {
        Element r = *this;
        for (const auto &[e, c] : o.terms_)
            r.add_term(e, c);
        return r;
    }

    Element operator-(const Element &o) const {
        Element r = *this;
        for (const auto &[e, c] : o.terms_)
            r.add_term(e, -c);
        return r;
    }

    Element operator-() const {
        Element r;
        for (const auto &[e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    Element scaled(const FieldElement &c) const {
        Element r;
        if (c.is_zero())
            return r;
        for (const auto &[e, k] : terms_)
            r.terms_.emplace(e, k * c);
        return r;
    }

    int degree() const {
        if (terms_.empty())
            return kDegMinusInfinity;
        return static_cast<int>(total_degree(terms_.rbegin()->first));
    }

    unsigned weighted_degree(const AlgebraPresentation &p) const {
        unsigned m = 0;
        for (const auto &[e, c] : terms_) {
            unsigned w = 0;
            for (size_t i = 0; i < e.size(); ++i)
                w += e[i] * p.generators[i].weight;
            m = std::max(m, w);
        }
        return m;
    }

    /// Terms of maximal weighted degree (the image in the associated graded ring).
    Element leading_form(const AlgebraPresentation &p) const {
        unsigned top = weighted_degree(p);
        Element r;
        for (const auto &[e, c] : terms_) {
            unsigned w = 0;
            for (size_t i = 0; i < e.size(); ++i)
                w += e[i] * p.generators[i].weight;
            if (w == top)
                r.terms_.emplace(e, c);
        }
        return r;
    }

    bool operator==(const Element &o) const {
        if (terms_.size() != o.terms_.size())
            return false;
        auto jt = o.terms_.begin();
        for (const auto &[e, c] : terms_) {
            if (e != jt->first || !(c == jt->second))
                return false;
            ++jt;
        }
        return true;
    }
    bool operator!=(const Element &o) const { return !(*this == o); }

    std::string str(const AlgebraPresentation &p) const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto &[e, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (s.empty()) {
                if (neg) {
                    s += "-";
                    cs = cs.substr(1);
                }
            } else {
                s += neg ? " - " : " + ";
                if (neg)
                    cs = cs.substr(1);
            }
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += p.generators[i].name;
                if (e[i] > 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                s += cs;
            else if (cs == "1")
                s += mono;
            else
                s += cs + "*" + mono;
        }
        return s;
    }

  private:
    Terms terms_;
};

struct RewriteBudget {
    unsigned long long steps = 10'000'000ULL;
};

/// PBW normal form: repeatedly rewrite the leftmost descent of each word
/// through the matching relation until every word is standard.
inline Element normalize(const AlgebraPresentation &p,
                         std::vector<std::pair<Word, FieldElement>> raw,
                         RewriteBudget budget = {}) {
    Element result;
    unsigned long long steps = 0;
    std::vector<std::pair<Word, FieldElement>> stack(std::move(raw));
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        if (c.is_zero())
            continue;
        size_t d = 0;
        bool found = false;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i + 1] < w[i]) {
                d = i;
                found = true;
                break;
            }
        if (!found) {
            result.add_term(word_exponents(w, p.num_generators()), c);
            continue;
        }
        if (++steps > budget.steps)
            throw BudgetExceeded("rewrite budget exceeded");
        const Relation &r = p.relation(w[d], w[d + 1]);
        Word swapped = w;
        std::swap(swapped[d], swapped[d + 1]);
        stack.emplace_back(std::move(swapped), c * r.lead);
        for (const auto &[tw, tc] : r.tail) {
            Word nw(w.begin(), w.begin() + d);
            nw.insert(nw.end(), tw.begin(), tw.end());
            nw.insert(nw.end(), w.begin() + d + 2, w.end());
            stack.emplace_back(std::move(nw), c * tc);
        }
    }
    return result;
}

inline Element normalize_word(const AlgebraPresentation &p, Word w,
                              RewriteBudget budget = {}) {
    return normalize(p, {{std::move(w), FieldElement::one(p.field)}}, budget);
}

inline Element el_mul(const AlgebraPresentation &p, const Element &f, const Element &g,
                      RewriteBudget budget = {}) {
    std::vector<std::pair<Word, FieldElement>> raw;
    for (const auto &[ea, ca] : f.terms())
        for (const auto &[eb, cb] : g.terms()) {
            Word w = monomial_word(ea);
            Word wb = monomial_word(eb);
            w.insert(w.end(), wb.begin(), wb.end());
            raw.emplace_back(std::move(w), ca * cb);
        }
    return normalize(p, std::move(raw), budget);
}

/// All exponent vectors with |alpha| <= D, in graded-lex order. Length C(n+D, n).
inline std::vector<Exponents> monomials_up_to(const AlgebraPresentation &p, unsigned D) {
    int n = p.num_generators();
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    // enumerate per degree, lex-descending within a degree
    auto gen = [&](auto &&self, int pos, unsigned rem) -> void {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int a = static_cast<int>(rem); a >= 0; --a) {
            cur[pos] = static_cast<unsigned>(a);
            self(self, pos + 1, rem - a);
        }
    };
    for (unsigned d = 0; d <= D; ++d) {
        if (n == 0) {
            if (d == 0)
                out.push_back({});
            continue;
        }
        gen(gen, 0, d);
    }
    return out;
}

} // namespace skewpbw
