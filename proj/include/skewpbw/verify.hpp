#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewpbw/oracles.hpp"
#include "skewpbw/report.hpp"

namespace skewpbw {

struct VerifyOptions {
    std::optional<unsigned> max_degree; // override catalog default bound
    unsigned oracle_max = 4;           // sweep closed forms for exponents 1..oracle_max
};

namespace verify_detail {

/// Root-of-unity variants exercised in addition to the catalog default field.
inline std::vector<Field> fields_for(const std::string &id) {
    const Catalog &cat = Catalog::instance();
    std::vector<Field> fs{cat.default_field(id)};
    if (id == "qdiff_dqh" || id == "dilation" || id == "additive_weyl" || id == "algebra_u" ||
        id == "qheisenberg" || id == "qsymplectic")
        fs.push_back(Field::Cyclo(3));
    else if (id == "qdifferential")
        fs.push_back(Field::Cyclo(4));
    else if (id == "quantum_plane") {
        fs.push_back(Field::Cyclo(2));
        fs.push_back(Field::Cyclo(3));
    } else if (id == "mq2")
        fs.push_back(Field::Cyclo(2));
    else if (id == "two_var_generic")
        fs.push_back(Field::Cyclo(2));
    return fs;
}

inline std::string short_field(const Field &f) { return f.str(); }

inline void check_facts(Report &rep, const std::string &id, const Field &field,
                        const VerifyOptions &opts) {
    const Catalog &cat = Catalog::instance();
    AlgebraPresentation p = cat.build(id, {}, field);
    std::string prefix = id + "[" + short_field(field) + "]";
    std::optional<CenterBasis> cb;
    auto center_at = [&](unsigned D) -> const CenterBasis & {
        if (!cb || cb->degree_bound != D)
            cb = center_basis(p, D);
        return *cb;
    };

    for (const CenterFact &fact : cat.expected_facts(id, field)) {
        switch (fact.kind) {
        case CenterFact::CentralElement: {
            Element e = parse_element(p, fact.element_expr);
            auto w = central_witness(p, e);
            rep.add(prefix + "/central/" + fact.element_expr, !w.has_value(), "commutes with all generators",
                    w ? "[" + p.generators[w->generator_index].name + ", f] = " +
                            w->commutator.str(p)
                      : "");
            break;
        }
        case CenterFact::TrivialUpTo: {
            unsigned D = opts.max_degree.value_or(fact.degree);
            const CenterBasis &b = center_at(D);
            bool trivial = b.basis.size() == 1 && b.basis[0].degree() == 0;
            std::string actual;
            for (const auto &e : b.basis)
                actual += (actual.empty() ? "" : "; ") + e.str(p);
            rep.add(prefix + "/center-trivial/D=" + std::to_string(D), trivial, "{1}",
                    "{" + actual + "}");
            break;
        }
        case CenterFact::BoundedCenterBasis: {
            unsigned D = opts.max_degree.value_or(fact.degree);
            const CenterBasis &b = center_at(D);
            std::vector<Element> expected;
            for (const auto &s : fact.basis_exprs)
                expected.push_back(parse_element(p, s));
            std::vector<Element> canon = echelon_basis(p, expected, D);
            bool same = canon.size() == b.basis.size();
            for (size_t i = 0; same && i < canon.size(); ++i)
                same = canon[i] == b.basis[i];
            std::string exp, act;
            for (const auto &e : canon)
                exp += (exp.empty() ? "" : "; ") + e.str(p);
            for (const auto &e : b.basis)
                act += (act.empty() ? "" : "; ") + e.str(p);
            rep.add(prefix + "/center-basis/D=" + std::to_string(D), same, "{" + exp + "}",
                    "{" + act + "}");
            break;
        }
        }
    }

    // Cancellation classification over the generic (non-root) field only.
    if (field == cat.default_field(id)) {
        if (cat.marked_cancellative(id)) {
            unsigned D = opts.max_degree.value_or(cat.default_degree(id));
            CancellationReport cr = classify_cancellation(id, field, center_at(D));
            rep.add(prefix + "/cancellation",
                    cr.status == CancellationReport::UniversallyCancellative,
                    "universally cancellative", cr.detail);
        } else {
            rep.notes.push_back(id + ": cancellation not classified");
        }
    }
}

inline void check_oracles(Report &rep, const std::string &id, const VerifyOptions &opts) {
    for (const LemmaOracleInfo &info : list_lemma_oracles()) {
        if (info.algebra != id)
            continue;
        Params extra_params;
        std::vector<Params> param_sets{{}};
        if (id == "two_var_generic" && info.lemma == "powers")
            param_sets.push_back({{"q2", "3"}, {"q3", "5"}});
        for (const Params &ps : param_sets) {
            for (int item = 1; item <= info.items; ++item) {
                bool all = true;
                std::string detail;
                unsigned M = opts.oracle_max;
                for (unsigned m = 1; m <= M && all; ++m) {
                    unsigned nmax = info.binary ? M : 1;
                    for (unsigned n = 1; n <= nmax && all; ++n) {
                        OracleCase oc = lemma_oracle(id, info.lemma, item, m, n, ps);
                        if (oc.lhs != oc.rhs) {
                            all = false;
                            detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                     ": engine " + oc.lhs.str(oc.pres) + " vs closed form " +
                                     oc.rhs.str(oc.pres);
                        }
                    }
                }
                std::string name = id + "/lemma/" + info.lemma + "/" + std::to_string(item);
                if (!ps.empty())
                    name += " (alt params)";
                rep.add(name, all, "closed form matches rewriting engine", detail);
            }
        }
        (void)extra_params;
    }
}

} // namespace verify_detail

inline void verify_algebra_into(Report &rep, const std::string &id,
                                const VerifyOptions &opts = {}) {
    for (const Field &f : verify_detail::fields_for(id))
        verify_detail::check_facts(rep, id, f, opts);
    verify_detail::check_oracles(rep, id, opts);
}

inline Report verify_all(const VerifyOptions &opts = {}) {
    Report rep;
    rep.command = "verify --all";
    for (const CatalogListing &l : Catalog::instance().list())
        verify_algebra_into(rep, l.id, opts);
    return rep;
}

} // namespace skewpbw
