#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewpbw/element.hpp"
#include "skewpbw/matrix.hpp"

namespace skewpbw {

inline Element commutator(const AlgebraPresentation &p, const Element &f, const Element &g,
                          RewriteBudget budget = {}) {
    return el_mul(p, f, g, budget) - el_mul(p, g, f, budget);
}

/// Nonzero commutator with one generator, certifying non-centrality.
struct CommutatorWitness {
    int generator_index;
    Element commutator;
};

inline std::optional<CommutatorWitness> central_witness(const AlgebraPresentation &p,
                                                        const Element &f,
                                                        RewriteBudget budget = {}) {
    for (int i = 0; i < p.num_generators(); ++i) {
        Element c = commutator(p, Element::generator(p, i), f, budget);
        if (!c.is_zero())
            return CommutatorWitness{i, std::move(c)};
    }
    return std::nullopt;
}

inline bool is_central(const AlgebraPresentation &p, const Element &f,
                       RewriteBudget budget = {}) {
    return !central_witness(p, f, budget).has_value();
}

struct CenterBasis {
    unsigned degree_bound;
    std::vector<Element> basis; // reduced echelon rows over graded-lex monomials
};

struct CenterLimits {
    size_t max_monomials = 20'000;
    RewriteBudget budget;
};

/// Canonical reduced-echelon basis of the span of the given elements,
/// coordinates taken over the graded-lex monomial list of degree <= D.
inline std::vector<Element> echelon_basis(const AlgebraPresentation &p,
                                          const std::vector<Element> &elems, unsigned D) {
    std::vector<Exponents> monos = monomials_up_to(p, D);
    std::map<Exponents, size_t, MonomialOrder> col;
    for (size_t j = 0; j < monos.size(); ++j)
        col.emplace(monos[j], j);
    std::vector<std::vector<FieldElement>> rows;
    for (const Element &e : elems) {
        std::vector<FieldElement> row(monos.size(), FieldElement::zero(p.field));
        for (const auto &[m, c] : e.terms())
            row[col.at(m)] = c;
        rows.push_back(std::move(row));
    }
    rref(rows, p.field);
    std::vector<Element> out;
    for (const auto &row : rows) {
        Element e;
        for (size_t j = 0; j < row.size(); ++j)
            e.add_term(monos[j], row[j]);
        out.push_back(std::move(e));
    }
    return out;
}

/// Z(A) intersected with the span of monomials of degree <= D, by exact
/// nullspace of the commutator constraints against every generator.
inline CenterBasis center_basis(const AlgebraPresentation &p, unsigned D,
                                CenterLimits limits = {}) {
    p.require_valid();
    std::vector<Exponents> monos = monomials_up_to(p, D);
    if (monos.size() > limits.max_monomials)
        throw ResourceLimit("monomial count " + std::to_string(monos.size()) +
                            " exceeds cap " + std::to_string(limits.max_monomials));
    size_t N = monos.size();
    int n = p.num_generators();

    // columns: candidate monomials; rows: (generator, support monomial) constraints
    std::vector<std::vector<FieldElement>> rows;
    for (int g = 0; g < n; ++g) {
        Element xg = Element::generator(p, g);
        std::vector<Element> comms(N);
        for (size_t j = 0; j < N; ++j)
            comms[j] = commutator(p, xg, Element::monomial(p, monos[j], FieldElement::one(p.field)),
                                  limits.budget);
        std::map<Exponents, size_t, MonomialOrder> rowof;
        size_t base = rows.size();
        for (size_t j = 0; j < N; ++j)
            for (const auto &[m, c] : comms[j].terms())
                if (rowof.emplace(m, base + rowof.size()).second)
                    rows.emplace_back(N, FieldElement::zero(p.field));
        for (size_t j = 0; j < N; ++j)
            for (const auto &[m, c] : comms[j].terms())
                rows[rowof.at(m)][j] = c;
    }

    ExactMatrix mat(rows.size(), N, p.field);
    for (size_t r = 0; r < rows.size(); ++r)
        mat.row(r) = std::move(rows[r]);
    std::vector<std::vector<FieldElement>> null = nullspace(mat);

    CenterBasis cb{D, {}};
    for (const auto &v : null) {
        Element e;
        for (size_t j = 0; j < N; ++j)
            e.add_term(monos[j], v[j]);
        cb.basis.push_back(std::move(e));
    }
    return cb;
}

/// Same generators, order and weights; every tail word of weight lower than
/// the leading word is dropped (equal-weight length-2 tail words survive).
inline AlgebraPresentation associated_graded(const AlgebraPresentation &p) {
    AlgebraPresentation g;
    g.field = p.field;
    g.generators = p.generators;
    for (const auto &[key, r] : p.relations()) {
        unsigned lhs_w = p.generators[r.lo].weight + p.generators[r.hi].weight;
        std::map<Word, FieldElement> tail;
        for (const auto &[w, c] : r.tail)
            if (p.word_weight(w) == lhs_w)
                tail.emplace(w, c);
        g.set_relation(r.hi, r.lo, r.lead, std::move(tail));
    }
    return g;
}

/// All relations purely quadratic of full weight: x_j x_i = c x_i x_j (+ equal-weight
/// degree-2 words from flattened ground variables).
inline bool is_quasi_commutative(const AlgebraPresentation &p) {
    for (const auto &[key, r] : p.relations()) {
        unsigned lhs_w = p.generators[r.lo].weight + p.generators[r.hi].weight;
        for (const auto &[w, c] : r.tail)
            if (w.size() != 2 || p.word_weight(w) != lhs_w)
                return false;
    }
    return true;
}

} // namespace skewpbw
