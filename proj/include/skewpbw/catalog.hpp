#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/center.hpp"
#include "skewpbw/parse.hpp"

namespace skewpbw {

/// Raw CLI-style parameter assignments, e.g. {"n","2"}, {"q","1/2"}.
using Params = std::map<std::string, std::string>;

enum class Cancellation { UniversallyCancellative, Unclassified };

struct CenterFact {
    enum Kind { CentralElement, BoundedCenterBasis, TrivialUpTo } kind;
    std::string element_expr;              // CentralElement
    unsigned degree = 0;                   // basis facts
    std::vector<std::string> basis_exprs;  // BoundedCenterBasis (includes "1")
};

struct CatalogListing {
    std::string id;
    std::string signature;
    std::string provenance;
};

namespace catalog_detail {

inline unsigned get_uint(const Params &ps, const std::string &key, unsigned dflt) {
    auto it = ps.find(key);
    if (it == ps.end())
        return dflt;
    try {
        return static_cast<unsigned>(std::stoul(it->second));
    } catch (...) {
        throw BadParameter("parameter " + key + " must be a nonnegative integer");
    }
}

inline FieldElement get_scalar(const Params &ps, const Field &f, const std::string &key,
                               const std::string &dflt) {
    auto it = ps.find(key);
    const std::string &s = it == ps.end() ? dflt : it->second;
    try {
        return parse_scalar(f, s);
    } catch (const ParseError &e) {
        throw BadParameter("parameter " + key + "=" + s + ": " + e.what());
    }
}

inline FieldElement require_nonzero(FieldElement v, const std::string &key) {
    if (v.is_zero())
        throw BadParameter("parameter " + key + " must be nonzero");
    return v;
}

/// Default q: the field parameter over Q(p) / Cyclo(n), else the literal fallback.
inline std::string default_q(const Field &f, const std::string &rational_fallback = "2") {
    return f.kind == FieldKind::Rationals ? rational_fallback : "p";
}

inline std::string suffixed(const std::string &base, unsigned i, unsigned n) {
    return n == 1 ? base : base + std::to_string(i);
}

/// Pairwise-coprime rational defaults 2/3, 5/7, 11/13, ... for multiparameter families.
inline std::string coprime_fraction(unsigned k) {
    static const unsigned primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                      41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
    unsigned a = 2 * k, b = 2 * k + 1;
    if (b >= sizeof(primes) / sizeof(primes[0]))
        throw BadParameter("too many default multiparameters; supply them explicitly");
    return std::to_string(primes[a]) + "/" + std::to_string(primes[b]);
}

} // namespace catalog_detail

class Catalog {
  public:
    static const Catalog &instance() {
        static Catalog c;
        return c;
    }

    std::vector<CatalogListing> list() const {
        std::vector<CatalogListing> out;
        for (const auto &[id, e] : entries_)
            out.push_back({id, e.signature, e.provenance});
        return out;
    }

    bool has(const std::string &id) const { return entries_.count(id) != 0; }

    bool marked_cancellative(const std::string &id) const {
        return entry(id).cancellation == Cancellation::UniversallyCancellative;
    }

    Field default_field(const std::string &id) const { return entry(id).default_field; }

    /// Documented bound for TrivialUpTo / verification runs.
    unsigned default_degree(const std::string &id) const { return entry(id).default_degree; }

    AlgebraPresentation build(const std::string &id, const Params &params = {},
                              std::optional<Field> field = {}) const {
        const Entry &e = entry(id);
        Field f = field.value_or(e.default_field);
        AlgebraPresentation p = e.build(params, f);
        p.require_valid();
        return p;
    }

    std::vector<CenterFact> expected_facts(const std::string &id, const Field &field) const {
        return entry(id).facts(field);
    }

  private:
    struct Entry {
        std::string signature;
        std::string provenance;
        Field default_field;
        unsigned default_degree;
        Cancellation cancellation;
        std::function<AlgebraPresentation(const Params &, const Field &)> build;
        std::function<std::vector<CenterFact>(const Field &)> facts;
    };

    const Entry &entry(const std::string &id) const {
        auto it = entries_.find(id);
        if (it == entries_.end())
            throw UnknownAlgebra("unknown algebra id '" + id + "'");
        return it->second;
    }

    Catalog();

    std::map<std::string, Entry> entries_;
};

namespace catalog_detail {

inline AlgebraPresentation start(const Field &f, std::vector<GeneratorInfo> gens) {
    AlgebraPresentation p;
    p.field = f;
    p.generators = std::move(gens);
    for (int hi = 1; hi < p.num_generators(); ++hi)
        for (int lo = 0; lo < hi; ++lo)
            p.set_commuting(hi, lo);
    return p;
}

inline std::vector<GeneratorInfo> block_names(std::initializer_list<std::string> bases,
                                              unsigned n) {
    std::vector<GeneratorInfo> g;
    for (const auto &b : bases)
        for (unsigned i = 1; i <= n; ++i)
            g.push_back({suffixed(b, i, n), 1});
    return g;
}

/// The classical operator-algebra pattern y_i x_i = q x_i y_i + d y_i + a
/// over flattened ground variables x_1..x_n.
inline AlgebraPresentation build_operator_pair(const Field &f, unsigned n,
                                               const std::string &xbase,
                                               const std::string &ybase,
                                               const std::vector<FieldElement> &q,
                                               const FieldElement &d, const FieldElement &a) {
    AlgebraPresentation p = start(f, block_names({xbase, ybase}, n));
    for (unsigned i = 0; i < n; ++i) {
        std::map<Word, FieldElement> tail;
        if (!d.is_zero())
            tail[{static_cast<int>(n + i)}] = d;
        if (!a.is_zero())
            tail[{}] = a;
        p.set_relation(static_cast<int>(n + i), static_cast<int>(i), q[i], std::move(tail));
    }
    return p;
}

} // namespace catalog_detail

inline Catalog::Catalog() {
    using namespace catalog_detail;
    auto add = [&](std::string id, Entry e) { entries_.emplace(std::move(id), std::move(e)); };

    auto trivial_facts = [](unsigned D) {
        return [D](const Field &) -> std::vector<CenterFact> {
            return {{CenterFact::TrivialUpTo, "", D, {}}};
        };
    };
    auto no_facts = [](const Field &) -> std::vector<CenterFact> { return {}; };

    // ---- operator algebras over K[t_1..t_n] -------------------------------

    add("weyl", {"weyl(n)", "Weyl algebra A_n(K): partial differential operators on K[t]",
                 Field::Q(), 4, Cancellation::UniversallyCancellative,
                 [](const Params &ps, const Field &f) {
                     unsigned n = get_uint(ps, "n", 1);
                     if (n == 0)
                         throw BadParameter("n must be >= 1");
                     std::vector<FieldElement> q(n, FieldElement::one(f));
                     return build_operator_pair(f, n, "t", "x", q, FieldElement::zero(f),
                                                FieldElement::one(f));
                 },
                 trivial_facts(4)});

    add("shift", {"shift(h)", "algebra of shift operators S_h on K[t]", Field::Q(), 5,
                  Cancellation::UniversallyCancellative,
                  [](const Params &ps, const Field &f) {
                      FieldElement h = get_scalar(ps, f, "h", "1");
                      return build_operator_pair(f, 1, "t", "x", {FieldElement::one(f)}, -h,
                                                 FieldElement::zero(f));
                  },
                  trivial_facts(5)});

    add("mixed_dh", {"mixed_dh(h)", "mixed algebra D_h: d/dt together with a shift operator",
                     Field::Q(), 4, Cancellation::UniversallyCancellative,
                     [](const Params &ps, const Field &f) {
                         FieldElement h = get_scalar(ps, f, "h", "1");
                         AlgebraPresentation p =
                             start(f, {{"t", 1}, {"x", 1}, {"xh", 1}});
                         p.set_relation(1, 0, FieldElement::one(f),
                                        {{Word{}, FieldElement::one(f)}});
                         p.set_relation(2, 0, FieldElement::one(f), {{Word{2}, -h}});
                         return p;
                     },
                     trivial_facts(4)});

    add("qdiff_dqh",
        {"qdiff_dqh(q,h)", "q-differential operators D_{q,h}: x y = q y x + h", Field::Qp(), 4,
         Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             FieldElement q = require_nonzero(get_scalar(ps, f, "q", default_q(f)), "q");
             FieldElement h = get_scalar(ps, f, "h", "1");
             return build_operator_pair(f, 1, "y", "x", {q}, FieldElement::zero(f), h);
         },
         [](const Field &f) -> std::vector<CenterFact> {
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 return {{CenterFact::CentralElement, "y^" + std::to_string(l), 0, {}},
                         {CenterFact::CentralElement, "x^" + std::to_string(l), 0, {}}};
             }
             return {{CenterFact::TrivialUpTo, "", 4, {}}};
         }});

    add("dilation",
        {"dilation(n,q)", "linear partial q-dilation operators H_i on K[t_1..t_n]", Field::Qp(),
         5, Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 1);
             if (n == 0)
                 throw BadParameter("n must be >= 1");
             FieldElement q = require_nonzero(get_scalar(ps, f, "q", default_q(f)), "q");
             std::vector<FieldElement> qs(n, q);
             return build_operator_pair(f, n, "t", "H", qs, FieldElement::zero(f),
                                        FieldElement::zero(f));
         },
         [](const Field &f) -> std::vector<CenterFact> {
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 std::vector<std::string> basis{"1", "t^" + std::to_string(l),
                                                "H^" + std::to_string(l)};
                 return {{CenterFact::CentralElement, "t^" + std::to_string(l), 0, {}},
                         {CenterFact::CentralElement, "H^" + std::to_string(l), 0, {}},
                         {CenterFact::BoundedCenterBasis, "", l, basis}};
             }
             return {{CenterFact::TrivialUpTo, "", 5, {}}};
         }});

    add("qdifferential",
        {"qdifferential(n,q)", "linear partial q-differential operators D_i on K[t_1..t_n]",
         Field::Qp(), 4, Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 1);
             if (n == 0)
                 throw BadParameter("n must be >= 1");
             FieldElement q = require_nonzero(get_scalar(ps, f, "q", default_q(f)), "q");
             std::vector<FieldElement> qs(n, q);
             return build_operator_pair(f, n, "t", "D", qs, FieldElement::zero(f),
                                        FieldElement::one(f));
         },
         [](const Field &f) -> std::vector<CenterFact> {
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 return {{CenterFact::CentralElement, "t^" + std::to_string(l), 0, {}},
                         {CenterFact::CentralElement, "D^" + std::to_string(l), 0, {}}};
             }
             return {{CenterFact::TrivialUpTo, "", 4, {}}};
         }});

    add("difference", {"difference(n)", "linear partial difference operators on K[t_1..t_n]",
                       Field::Q(), 4, Cancellation::UniversallyCancellative,
                       [](const Params &ps, const Field &f) {
                           unsigned n = get_uint(ps, "n", 1);
                           if (n == 0)
                               throw BadParameter("n must be >= 1");
                           std::vector<FieldElement> q(n, FieldElement::one(f));
                           return build_operator_pair(f, n, "t", "Delta", q,
                                                      FieldElement::one(f), FieldElement::one(f));
                       },
                       trivial_facts(4)});

    add("discrete_linear",
        {"discrete_linear(n)", "algebra of multidimensional discrete linear systems",
         Field::Q(), 4, Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 1);
             if (n == 0)
                 throw BadParameter("n must be >= 1");
             std::vector<FieldElement> q(n, FieldElement::one(f));
             return build_operator_pair(f, n, "t", "x", q, FieldElement::one(f),
                                        FieldElement::zero(f));
         },
         trivial_facts(4)});

    add("additive_weyl",
        {"additive_weyl(n,q1..qn)", "additive analogue of the Weyl algebra A_n(q_1..q_n)",
         Field::Qp(), 4, Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 1);
             if (n == 0)
                 throw BadParameter("n must be >= 1");
             std::vector<FieldElement> qs;
             for (unsigned i = 1; i <= n; ++i)
                 qs.push_back(require_nonzero(
                     get_scalar(ps, f, "q" + std::to_string(i), default_q(f)), "q"));
             return build_operator_pair(f, n, "x", "y", qs, FieldElement::zero(f),
                                        FieldElement::one(f));
         },
         [](const Field &f) -> std::vector<CenterFact> {
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 return {{CenterFact::CentralElement, "x^" + std::to_string(l), 0, {}},
                         {CenterFact::CentralElement, "y^" + std::to_string(l), 0, {}}};
             }
             return {{CenterFact::TrivialUpTo, "", 4, {}}};
         }});

    // ---- quasi-commutative quantum spaces ---------------------------------

    add("multiparam_quantum_space",
        {"multiparam_quantum_space(n,qij)",
         "n-multiparametric quantum space x_j x_i = q_ij x_i x_j", Field::Q(), 4,
         Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 3);
             if (n < 2)
                 throw BadParameter("n must be >= 2");
             AlgebraPresentation p = start(f, block_names({"x"}, n));
             unsigned k = 0;
             for (unsigned i = 1; i <= n; ++i)
                 for (unsigned j = i + 1; j <= n; ++j) {
                     std::string key = "q" + std::to_string(i) + std::to_string(j);
                     FieldElement q = require_nonzero(
                         get_scalar(ps, f, key, coprime_fraction(k)), key);
                     p.set_relation(static_cast<int>(j - 1), static_cast<int>(i - 1), q, {});
                     ++k;
                 }
             return p;
         },
         trivial_facts(4)});

    add("quantum_plane",
        {"quantum_plane(q)", "quantum plane y x = q x y", Field::Qp(), 6,
         Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             FieldElement q = require_nonzero(get_scalar(ps, f, "q", default_q(f)), "q");
             AlgebraPresentation p = start(f, {{"x", 1}, {"y", 1}});
             p.set_relation(1, 0, q, {});
             return p;
         },
         [](const Field &f) -> std::vector<CenterFact> {
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 std::string xl = "x^" + std::to_string(l), yl = "y^" + std::to_string(l);
                 return {{CenterFact::CentralElement, xl, 0, {}},
                         {CenterFact::CentralElement, yl, 0, {}},
                         {CenterFact::BoundedCenterBasis, "", l, {"1", xl, yl}}};
             }
             return {{CenterFact::TrivialUpTo, "", 6, {}}};
         }});

    add("jordan_plane", {"jordan_plane", "Jordan plane y x = x y - x^2", Field::Q(), 5,
                         Cancellation::UniversallyCancellative,
                         [](const Params &, const Field &f) {
                             AlgebraPresentation p = start(f, {{"x", 1}, {"y", 1}});
                             p.set_relation(1, 0, FieldElement::one(f),
                                            {{Word{0, 0}, -FieldElement::one(f)}});
                             return p;
                         },
                         trivial_facts(5)});

    // ---- enveloping algebras ---------------------------------------------

    add("usl2", {"usl2", "universal enveloping algebra of sl(2,K)", Field::Q(), 2,
                 Cancellation::Unclassified,
                 [](const Params &, const Field &f) {
                     FieldElement one = FieldElement::one(f), two = parse_scalar(f, "2");
                     AlgebraPresentation p = start(f, {{"x", 1}, {"y", 1}, {"z", 1}});
                     p.set_relation(1, 0, one, {{Word{2}, -one}});     // yx = xy - z
                     p.set_relation(2, 0, one, {{Word{0}, two}});      // zx = xz + 2x
                     p.set_relation(2, 1, one, {{Word{1}, -two}});     // zy = yz - 2y
                     return p;
                 },
                 [](const Field &) -> std::vector<CenterFact> {
                     return {{CenterFact::CentralElement, "4*x*y + z^2 - 2*z", 0, {}},
                             {CenterFact::BoundedCenterBasis, "", 2,
                              {"1", "4*x*y + z^2 - 2*z"}}};
                 }});

    add("uso3", {"uso3", "universal enveloping algebra of so(3,K)", Field::Q(), 2,
                 Cancellation::Unclassified,
                 [](const Params &, const Field &f) {
                     FieldElement one = FieldElement::one(f);
                     AlgebraPresentation p = start(f, {{"x", 1}, {"y", 1}, {"z", 1}});
                     p.set_relation(1, 0, one, {{Word{2}, -one}}); // yx = xy - z
                     p.set_relation(2, 0, one, {{Word{1}, one}});  // zx = xz + y
                     p.set_relation(2, 1, one, {{Word{0}, -one}}); // zy = yz - x
                     return p;
                 },
                 [](const Field &) -> std::vector<CenterFact> {
                     return {{CenterFact::CentralElement, "x^2 + y^2 + z^2", 0, {}},
                             {CenterFact::BoundedCenterBasis, "", 2,
                              {"1", "x^2 + y^2 + z^2"}}};
                 }});

    add("solvable_lie3",
        {"solvable_lie3(q1,q2)",
         "enveloping algebra of a completely solvable 3-dimensional Lie algebra", Field::Q(), 4,
         Cancellation::Unclassified,
         [](const Params &ps, const Field &f) {
             FieldElement q1 = get_scalar(ps, f, "q1", "1");
             FieldElement q2 = get_scalar(ps, f, "q2", "1");
             FieldElement one = FieldElement::one(f);
             AlgebraPresentation p = start(f, {{"x", 1}, {"y", 1}, {"z", 1}});
             std::map<Word, FieldElement> t1, t2;
             if (!q1.is_zero())
                 t1[{1}] = q1;
             if (!q2.is_zero())
                 t2[{2}] = q2;
             p.set_relation(1, 0, one, std::move(t1)); // yx = xy + q1*y
             p.set_relation(2, 0, one, std::move(t2)); // zx = xz + q2*z
             return p;
         },
         trivial_facts(4)});

    add("uprime_so3",
        {"uprime_so3", "quantum algebra U'(so(3,K)) with q = p^2", Field::Qp(), 3,
         Cancellation::Unclassified,
         [](const Params &, const Field &f) {
             if (f.kind == FieldKind::Rationals)
                 throw BadParameter("uprime_so3 needs the formal parameter p");
             FieldElement pp = FieldElement::parameter(f);
             FieldElement q = pp * pp;
             AlgebraPresentation p = start(f, {{"I1", 1}, {"I2", 1}, {"I3", 1}});
             p.set_relation(1, 0, q, {{Word{2}, -pp}});                // I2 I1 = q I1 I2 - p I3
             p.set_relation(2, 0, q.inverse(), {{Word{1}, pp.inverse()}});
             p.set_relation(2, 1, q, {{Word{0}, -pp}});                // I3 I2 = q I2 I3 - p I1
             return p;
         },
         [](const Field &) -> std::vector<CenterFact> {
             return {{CenterFact::CentralElement,
                      "-p*(p^4-1)*I1*I2*I3 + p^4*I1^2 + I2^2 + p^4*I3^2", 0, {}}};
         }});

    // ---- quantum algebras of section-three type ---------------------------

    add("dispin", {"dispin", "dispin algebra U(osp(1,2))", Field::Q(), 2,
                   Cancellation::Unclassified,
                   [](const Params &, const Field &f) {
                       FieldElement one = FieldElement::one(f);
                       AlgebraPresentation p = start(f, {{"x", 1}, {"y", 1}, {"z", 1}});
                       p.set_relation(1, 0, one, {{Word{0}, -one}}); // yx = xy - x
                       p.set_relation(2, 0, -one, {{Word{1}, one}}); // zx = -xz + y
                       p.set_relation(2, 1, one, {{Word{2}, -one}}); // zy = yz - z
                       return p;
                   },
                   [](const Field &) -> std::vector<CenterFact> {
                       return {{CenterFact::CentralElement,
                                "4*x^2*z^2 - y^2 - 2*x*z - y", 0, {}}};
                   }});

    add("woronowicz",
        {"woronowicz(q)", "Woronowicz algebra W_q(sl(2,K))", Field::Qp(), 5,
         Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             FieldElement q = require_nonzero(get_scalar(ps, f, "q", default_q(f)), "q");
             FieldElement q2 = q * q, q4 = q2 * q2;
             FieldElement one = FieldElement::one(f);
             AlgebraPresentation p = start(f, {{"x", 1}, {"y", 1}, {"z", 1}});
             // yx = q^-2 xy - q^-1 z
             p.set_relation(1, 0, q2.inverse(), {{Word{2}, -q.inverse()}});
             // zx = q^-4 xz - q^-4 (1+q^2) x
             p.set_relation(2, 0, q4.inverse(), {{Word{0}, -(one + q2) * q4.inverse()}});
             // zy = q^4 yz + (1+q^2) y
             p.set_relation(2, 1, q4, {{Word{1}, one + q2}});
             return p;
         },
         trivial_facts(5)});

    // The generic center of U is not trivial: q^4 x^4 + (1-q^4) x^2 y z commutes
    // with every generator (checked against each relation directly), so the
    // trivial-center classification that would follow from it is withheld.
    add("algebra_u",
        {"algebra_u(n,q)", "algebra U on x_i, y_i, z_i with z_i y_i = q^2 y_i z_i - q^2 x_i^2",
         Field::Qp(), 4, Cancellation::Unclassified,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 1);
             if (n == 0)
                 throw BadParameter("n must be >= 1");
             FieldElement q = require_nonzero(get_scalar(ps, f, "q", default_q(f)), "q");
             FieldElement q2 = q * q;
             std::vector<GeneratorInfo> gens;
             for (auto base : {"x", "y", "z"})
                 for (unsigned i = 1; i <= n; ++i)
                     gens.push_back({base + std::to_string(i), 1});
             AlgebraPresentation p = start(f, std::move(gens));
             int N = static_cast<int>(n);
             for (int i = 0; i < N; ++i) {
                 p.set_relation(N + i, i, q, {});          // y_i x_i = q x_i y_i
                 p.set_relation(2 * N + i, i, q.inverse(), {}); // z_i x_i = q^-1 x_i z_i
                 p.set_relation(2 * N + i, N + i, q2,
                                {{Word{i, i}, -q2}});      // z_i y_i = q^2 y_i z_i - q^2 x_i^2
             }
             return p;
         },
         [](const Field &f) -> std::vector<CenterFact> {
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 return {{CenterFact::CentralElement, "x1^" + std::to_string(l), 0, {}}};
             }
             return {{CenterFact::CentralElement,
                      "p^4*x1^4 + (1 - p^4)*x1^2*y1*z1", 0, {}},
                     {CenterFact::BoundedCenterBasis, "", 4,
                      {"1", "p^4*x1^4 + (1 - p^4)*x1^2*y1*z1"}}};
         }});

    add("qheisenberg",
        {"qheisenberg(n,q)", "q-Heisenberg algebra H_n(q)", Field::Qp(), 3,
         Cancellation::Unclassified,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 1);
             if (n == 0)
                 throw BadParameter("n must be >= 1");
             FieldElement q = require_nonzero(get_scalar(ps, f, "q", default_q(f)), "q");
             AlgebraPresentation p = start(f, block_names({"x", "y", "z"}, n));
             int N = static_cast<int>(n);
             for (int i = 0; i < N; ++i) {
                 p.set_relation(N + i, i, q, {});                    // y_i x_i = q x_i y_i
                 p.set_relation(2 * N + i, N + i, q, {});            // z_i y_i = q y_i z_i
                 p.set_relation(2 * N + i, i, q.inverse(),
                                {{Word{N + i}, FieldElement::one(f)}}); // z_i x_i = q^-1 x_i z_i + y_i
             }
             return p;
         },
         [](const Field &f) -> std::vector<CenterFact> {
             std::vector<CenterFact> facts{
                 {CenterFact::CentralElement, "(p^2-1)*x*y*z - y^2", 0, {}}};
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 for (auto v : {"x", "y", "z"})
                     facts.push_back({CenterFact::CentralElement,
                                      std::string(v) + "^" + std::to_string(l), 0, {}});
             }
             return facts;
         }});

    add("mq2",
        {"mq2(q)", "coordinate algebra of the quantum matrix space M_q(2)", Field::Qp(), 2,
         Cancellation::Unclassified,
         [](const Params &ps, const Field &f) {
             FieldElement q = require_nonzero(get_scalar(ps, f, "q", default_q(f)), "q");
             FieldElement qi = q.inverse();
             AlgebraPresentation p = start(f, {{"u", 1}, {"v", 1}, {"x", 1}, {"y", 1}});
             p.set_relation(2, 0, q, {});  // x u = q u x
             p.set_relation(3, 0, qi, {}); // y u = q^-1 u y
             p.set_relation(2, 1, q, {});  // x v = q v x
             p.set_relation(3, 1, qi, {}); // y v = q^-1 v y
             p.set_relation(3, 2, FieldElement::one(f),
                            {{Word{0, 1}, -(q - qi)}}); // y x = x y - (q - q^-1) u v
             return p;
         },
         [](const Field &f) -> std::vector<CenterFact> {
             std::vector<CenterFact> facts{
                 {CenterFact::CentralElement, "x*y - p*u*v", 0, {}}};
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 facts.push_back({CenterFact::CentralElement, "x^" + std::to_string(l), 0, {}});
                 facts.push_back({CenterFact::CentralElement, "y^" + std::to_string(l), 0, {}});
                 for (unsigned i = 0; i <= l; ++i) {
                     std::string e;
                     if (i > 0)
                         e = "u^" + std::to_string(i);
                     if (i < l)
                         e += (e.empty() ? "" : "*") + ("v^" + std::to_string(l - i));
                     facts.push_back({CenterFact::CentralElement, e, 0, {}});
                 }
             }
             return facts;
         }});

    add("qsymplectic",
        {"qsymplectic(n,q)", "quantum symplectic space O_q(sp(K^2n))", Field::Qp(), 3,
         Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 1);
             if (n == 0)
                 throw BadParameter("n must be >= 1");
             FieldElement q = require_nonzero(get_scalar(ps, f, "q", default_q(f)), "q");
             FieldElement q2 = q * q;
             FieldElement one = FieldElement::one(f);
             AlgebraPresentation p = start(f, block_names({"x"}, 2 * n));
             unsigned N = 2 * n;
             for (unsigned i = 1; i <= N; ++i) {
                 unsigned ip = N - i + 1;
                 for (unsigned j = i + 1; j <= N; ++j) {
                     if (j != ip) {
                         p.set_relation(static_cast<int>(j - 1), static_cast<int>(i - 1), q, {});
                         continue;
                     }
                     std::map<Word, FieldElement> tail;
                     for (unsigned k = 1; k < i; ++k) {
                         unsigned kp = N - k + 1;
                         tail[{static_cast<int>(k - 1), static_cast<int>(kp - 1)}] =
                             (q2 - one) * field_pow(q, static_cast<long>(i - k));
                     }
                     p.set_relation(static_cast<int>(j - 1), static_cast<int>(i - 1), q2,
                                    std::move(tail));
                 }
             }
             return p;
         },
         [](const Field &f) -> std::vector<CenterFact> {
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 return {{CenterFact::CentralElement, "x1^" + std::to_string(l), 0, {}},
                         {CenterFact::CentralElement, "x2^" + std::to_string(l), 0, {}}};
             }
             return {{CenterFact::TrivialUpTo, "", 3, {}}};
         }});

    // ---- multiparameter Weyl families -------------------------------------

    add("maltsiniotis_weyl",
        {"maltsiniotis_weyl(n,qij,lambdai)", "quantum Weyl algebra of Maltsiniotis",
         Field::Q(), 4, Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 1);
             if (n == 0)
                 throw BadParameter("n must be >= 1");
             std::vector<FieldElement> lambda;
             for (unsigned i = 1; i <= n; ++i)
                 lambda.push_back(require_nonzero(
                     get_scalar(ps, f, "lambda" + std::to_string(i), std::to_string(i + 1)),
                     "lambda"));
             std::map<std::pair<unsigned, unsigned>, FieldElement> qij;
             unsigned k = 0;
             for (unsigned i = 1; i <= n; ++i)
                 for (unsigned j = i + 1; j <= n; ++j) {
                     std::string key = "q" + std::to_string(i) + std::to_string(j);
                     qij[{i, j}] = require_nonzero(
                         get_scalar(ps, f, key, coprime_fraction(k)), key);
                     ++k;
                 }
             std::vector<GeneratorInfo> gens;
             for (unsigned i = 1; i <= n; ++i) {
                 gens.push_back({suffixed("y", i, n), 1});
                 gens.push_back({suffixed("x", i, n), 1});
             }
             AlgebraPresentation p = start(f, std::move(gens));
             auto Y = [](unsigned i) { return static_cast<int>(2 * (i - 1)); };
             auto X = [](unsigned i) { return static_cast<int>(2 * (i - 1) + 1); };
             FieldElement one = FieldElement::one(f);
             for (unsigned i = 1; i <= n; ++i) {
                 std::map<Word, FieldElement> tail{{Word{}, one}};
                 for (unsigned j = 1; j < i; ++j)
                     tail[{Y(j), X(j)}] = lambda[j - 1] - one;
                 p.set_relation(X(i), Y(i), lambda[i - 1], std::move(tail));
                 for (unsigned j = i + 1; j <= n; ++j) {
                     const FieldElement &q = qij.at({i, j});
                     p.set_relation(X(j), X(i), (lambda[i - 1] * q).inverse(), {});
                     p.set_relation(Y(j), Y(i), q.inverse(), {});
                     p.set_relation(Y(j), X(i), q, {});
                     p.set_relation(X(j), Y(i), lambda[i - 1] * q, {});
                 }
             }
             return p;
         },
         trivial_facts(4)});

    add("multiparam_weyl_sym",
        {"multiparam_weyl_sym(n,qi,gammaij)",
         "multiparameter quantized Weyl algebra of symmetric type", Field::Q(), 4,
         Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 1);
             if (n == 0)
                 throw BadParameter("n must be >= 1");
             std::vector<FieldElement> qv;
             for (unsigned i = 1; i <= n; ++i)
                 qv.push_back(require_nonzero(
                     get_scalar(ps, f, "q" + std::to_string(i), std::to_string(i + 1)), "q"));
             std::map<std::pair<unsigned, unsigned>, FieldElement> gij;
             unsigned k = 0;
             for (unsigned i = 1; i <= n; ++i)
                 for (unsigned j = i + 1; j <= n; ++j) {
                     std::string key = "gamma" + std::to_string(i) + std::to_string(j);
                     gij[{i, j}] = require_nonzero(
                         get_scalar(ps, f, key, coprime_fraction(k)), key);
                     ++k;
                 }
             std::vector<GeneratorInfo> gens;
             for (unsigned i = 1; i <= n; ++i) {
                 gens.push_back({suffixed("y", i, n), 1});
                 gens.push_back({suffixed("x", i, n), 1});
             }
             AlgebraPresentation p = start(f, std::move(gens));
             auto Y = [](unsigned i) { return static_cast<int>(2 * (i - 1)); };
             auto X = [](unsigned i) { return static_cast<int>(2 * (i - 1) + 1); };
             FieldElement one = FieldElement::one(f);
             for (unsigned i = 1; i <= n; ++i) {
                 p.set_relation(X(i), Y(i), qv[i - 1], {{Word{}, one}});
                 for (unsigned j = i + 1; j <= n; ++j) {
                     const FieldElement &g = gij.at({i, j});
                     p.set_relation(X(j), X(i), g.inverse(), {});
                     p.set_relation(Y(j), Y(i), g.inverse(), {});
                     p.set_relation(Y(j), X(i), g, {});
                     p.set_relation(X(j), Y(i), g.inverse(), {});
                 }
             }
             return p;
         },
         trivial_facts(4)});

    // ---- two-variable generic family and quadratic algebras ---------------

    add("two_var_generic",
        {"two_var_generic(q1,q2,q3,q4)", "two-generator algebra yx = q1 xy + q2 x + q3 y + q4",
         Field::Qp(), 5, Cancellation::Unclassified,
         [](const Params &ps, const Field &f) {
             FieldElement q1 = require_nonzero(get_scalar(ps, f, "q1", default_q(f)), "q1");
             FieldElement q2 = get_scalar(ps, f, "q2", "0");
             FieldElement q3 = get_scalar(ps, f, "q3", "0");
             FieldElement q4 = get_scalar(ps, f, "q4", "1");
             AlgebraPresentation p = start(f, {{"x", 1}, {"y", 1}});
             std::map<Word, FieldElement> tail;
             if (!q2.is_zero())
                 tail[{0}] = q2;
             if (!q3.is_zero())
                 tail[{1}] = q3;
             if (!q4.is_zero())
                 tail[{}] = q4;
             p.set_relation(1, 0, q1, std::move(tail));
             return p;
         },
         [](const Field &f) -> std::vector<CenterFact> {
             if (f.kind == FieldKind::Cyclotomic) {
                 unsigned l = f.cyclo_order;
                 std::string xl = "x^" + std::to_string(l), yl = "y^" + std::to_string(l);
                 return {{CenterFact::CentralElement, xl, 0, {}},
                         {CenterFact::CentralElement, yl, 0, {}}};
             }
             return {{CenterFact::TrivialUpTo, "", 5, {}}};
         }});

    add("quadratic_a1",
        {"quadratic_a1(a2,a3,xi1,xi2,a5,a6)", "quadratic algebra A1 in three variables",
         Field::Q(), 3, Cancellation::Unclassified,
         [](const Params &ps, const Field &f) {
             FieldElement a2 = get_scalar(ps, f, "a2", "1");
             FieldElement a3 = get_scalar(ps, f, "a3", "1");
             FieldElement xi1 = get_scalar(ps, f, "xi1", "1");
             FieldElement xi2 = get_scalar(ps, f, "xi2", "1");
             FieldElement a5 = get_scalar(ps, f, "a5", "1");
             FieldElement a6 = get_scalar(ps, f, "a6", "1");
             AlgebraPresentation p = start(f, {{"y", 2}, {"z", 2}, {"x", 3}});
             FieldElement one = FieldElement::one(f);
             // x y = y x - a2 y^2 - a3 y z - xi1 z^2
             p.set_relation(2, 0, one,
                            {{Word{0, 0}, -a2}, {Word{0, 1}, -a3}, {Word{1, 1}, -xi1}});
             // x z = z x - xi2 y^2 - a5 y z - a6 z^2
             p.set_relation(2, 1, one,
                            {{Word{0, 0}, -xi2}, {Word{0, 1}, -a5}, {Word{1, 1}, -a6}});
             return p;
         },
         no_facts});

    add("quadratic_a2",
        {"quadratic_a2(a,b,c)", "quadratic algebra A2: yx = xy + axz + bz^2, zy = yz + cz^2",
         Field::Q(), 5, Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             FieldElement a = require_nonzero(get_scalar(ps, f, "a", "1"), "a");
             FieldElement b = require_nonzero(get_scalar(ps, f, "b", "1"), "b");
             FieldElement c = require_nonzero(get_scalar(ps, f, "c", "-1"), "c");
             AlgebraPresentation p = start(f, {{"x", 1}, {"y", 4}, {"z", 2}});
             FieldElement one = FieldElement::one(f);
             p.set_relation(1, 0, one, {{Word{0, 2}, a}, {Word{2, 2}, b}});
             p.set_relation(2, 1, one, {{Word{2, 2}, c}});
             return p;
         },
         trivial_facts(5)});

    add("quadratic_a3",
        {"quadratic_a3(a2,xi2)", "quadratic algebra A3: yx = xy + a2 y^2, zx = xz + xi2 y^2",
         Field::Q(), 2, Cancellation::Unclassified,
         [](const Params &ps, const Field &f) {
             FieldElement a2 = get_scalar(ps, f, "a2", "2");
             FieldElement xi2 = get_scalar(ps, f, "xi2", "3");
             AlgebraPresentation p = start(f, {{"x", 3}, {"y", 2}, {"z", 2}});
             FieldElement one = FieldElement::one(f);
             p.set_relation(1, 0, one, {{Word{1, 1}, a2}});
             p.set_relation(2, 0, one, {{Word{1, 1}, xi2}});
             return p;
         },
         [](const Field &) -> std::vector<CenterFact> {
             return {{CenterFact::CentralElement, "3*y - 2*z", 0, {}}};
         }});

    add("conformal",
        {"conformal(a,b,c)", "conformal sl(2) deformation: yx = cxy + bz^2 + z", Field::Q(), 5,
         Cancellation::UniversallyCancellative,
         [](const Params &ps, const Field &f) {
             FieldElement a = require_nonzero(get_scalar(ps, f, "a", "2"), "a");
             FieldElement b = require_nonzero(get_scalar(ps, f, "b", "1"), "b");
             FieldElement c = require_nonzero(get_scalar(ps, f, "c", "3"), "c");
             FieldElement one = FieldElement::one(f);
             FieldElement ai = a.inverse();
             AlgebraPresentation p = start(f, {{"x", 1}, {"z", 1}, {"y", 2}});
             p.set_relation(1, 0, ai, {{Word{0}, -ai}});             // zx = (1/a) xz - (1/a) x
             p.set_relation(2, 0, c, {{Word{1, 1}, b}, {Word{1}, one}}); // yx = c xy + b z^2 + z
             p.set_relation(2, 1, ai, {{Word{2}, -ai}});             // yz = (1/a) zy - (1/a) y
             return p;
         },
         trivial_facts(5)});

    add("witten_7param",
        {"witten_7param(xi1..xi7)", "Witten's 7-parameter deformation of U(sl(2,K))",
         Field::Q(), 3, Cancellation::Unclassified,
         [](const Params &ps, const Field &f) {
             std::vector<FieldElement> xi;
             for (unsigned i = 1; i <= 7; ++i)
                 xi.push_back(get_scalar(ps, f, "xi" + std::to_string(i), "1"));
             if (xi[0].is_zero() || xi[2].is_zero() || xi[4].is_zero())
                 throw BadParameter("xi1, xi3, xi5 must be nonzero");
             AlgebraPresentation p = start(f, {{"x", 1}, {"z", 1}, {"y", 2}});
             p.set_relation(1, 0, xi[0].inverse(), {{Word{0}, -xi[1] * xi[0].inverse()}});
             p.set_relation(2, 0, xi[4], {{Word{1, 1}, xi[5]}, {Word{1}, xi[6]}});
             p.set_relation(2, 1, xi[2].inverse(), {{Word{2}, -xi[3] * xi[2].inverse()}});
             return p;
         },
         no_facts});

    add("diffusion",
        {"diffusion(n,cij)", "diffusion-type algebra on D_i over K[x_1..x_n]", Field::Q(), 2,
         Cancellation::Unclassified,
         [](const Params &ps, const Field &f) {
             unsigned n = get_uint(ps, "n", 2);
             if (n < 2)
                 throw BadParameter("n must be >= 2");
             AlgebraPresentation p = start(f, block_names({"x", "D"}, n));
             int N = static_cast<int>(n);
             for (unsigned i = 1; i <= n; ++i)
                 for (unsigned j = i + 1; j <= n; ++j) {
                     std::string kf = "c" + std::to_string(i) + std::to_string(j);
                     std::string kb = "c" + std::to_string(j) + std::to_string(i);
                     FieldElement cij = require_nonzero(get_scalar(ps, f, kf, "1"), kf);
                     FieldElement cji = require_nonzero(get_scalar(ps, f, kb, "1"), kb);
                     FieldElement cji_inv = cji.inverse();
                     // D_j D_i = (c_ij/c_ji) D_i D_j - (1/c_ji) x_j D_i + (1/c_ji) x_i D_j
                     p.set_relation(N + static_cast<int>(j) - 1, N + static_cast<int>(i) - 1,
                                    cij * cji_inv,
                                    {{Word{static_cast<int>(j) - 1, N + static_cast<int>(i) - 1},
                                      -cji_inv},
                                     {Word{static_cast<int>(i) - 1, N + static_cast<int>(j) - 1},
                                      cji_inv}});
                 }
             return p;
         },
         [](const Field &) -> std::vector<CenterFact> {
             return {{CenterFact::CentralElement, "x1", 0, {}},
                     {CenterFact::CentralElement, "x2", 0, {}}};
         }});
}

/// Cancellation classification per the trivial-center criterion.
struct CancellationReport {
    enum Status { UniversallyCancellative, Conflict, NotClassified } status;
    std::string detail;
};

inline CancellationReport classify_cancellation(const std::string &id, const Field &field,
                                                const CenterBasis &center) {
    const Catalog &cat = Catalog::instance();
    bool trivial = center.basis.size() == 1 && center.basis[0].degree() == 0;
    bool marked = cat.marked_cancellative(id) && field.kind != FieldKind::Cyclotomic;
    if (marked && trivial)
        return {CancellationReport::UniversallyCancellative,
                "universally cancellative; corroborated by trivial center to degree " +
                    std::to_string(center.degree_bound)};
    if (marked)
        return {CancellationReport::Conflict,
                "marked universally cancellative but bounded center is nontrivial"};
    return {CancellationReport::NotClassified, "not classified"};
}

} // namespace skewpbw
