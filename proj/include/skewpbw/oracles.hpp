#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewpbw/catalog.hpp"

namespace skewpbw {

/// A registered closed-form commutation rule: the engine-side product (lhs,
/// normalized by rewriting) and the independently constructed closed form (rhs).
struct OracleCase {
    AlgebraPresentation pres;
    Element lhs;
    Element rhs;
};

struct LemmaOracleInfo {
    std::string algebra;
    std::string lemma;
    int items;
    bool binary; // items taking two exponents (m and n)
};

inline std::vector<LemmaOracleInfo> list_lemma_oracles() {
    return {
        {"two_var_generic", "powers", 2, false},
        {"two_var_generic", "powers-special", 2, false},
        {"two_var_generic", "operator-step", 2, false},
        {"woronowicz", "powers", 6, false},
        {"algebra_u", "powers", 4, false},
        {"dispin", "powers", 7, true}, // items 3 and 7 use both exponents
        {"mq2", "powers", 2, false},
        {"quadratic_a2", "powers", 3, false},
    };
}

namespace oracle_detail {

inline Element mono(const AlgebraPresentation &p, Exponents e, FieldElement c) {
    return Element::monomial(p, std::move(e), std::move(c));
}

inline FieldElement rat(const Field &f, const Rational &r) { return FieldElement::make(f, r); }

/// sum_{i=0}^{m-1} (q^step)^i for possibly negative step.
inline FieldElement power_sum(const FieldElement &q, long step, unsigned m) {
    return geometric_sum(field_pow(q, step), m);
}

inline Word repeat(int g, unsigned k) { return Word(k, g); }

inline Word cat(Word a, const Word &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Normal form of a word, one generator factor at a time. Equivalent to a
/// single normalize_word call but collects like terms between steps, which
/// keeps high powers of non-commuting generators polynomial.
inline Element engine_product(const AlgebraPresentation &p, const Word &w) {
    Element acc = Element::one(p);
    for (int g : w)
        acc = el_mul(p, acc, Element::generator(p, g));
    return acc;
}

} // namespace oracle_detail

inline OracleCase lemma_oracle(const std::string &algebra, const std::string &lemma, int item,
                               unsigned m, unsigned n = 1, const Params &params = {},
                               std::optional<Field> field_opt = {}) {
    using namespace oracle_detail;
    const Catalog &cat_ = Catalog::instance();
    if (m == 0 || n == 0)
        throw BadArgument("oracle exponents must be >= 1");
    AlgebraPresentation p = cat_.build(algebra, params, field_opt);
    const Field &f = p.field;
    auto q_of = [&](const std::string &key, const std::string &dflt) {
        return catalog_detail::get_scalar(params, f, key,
                                          f.kind == FieldKind::Rationals ? dflt : "p");
    };
    FieldElement one = FieldElement::one(f);
    OracleCase oc{p, Element::zero(), Element::zero()};
    Element rhs;

    auto bad_item = [&]() -> OracleCase & {
        throw UnknownLemma("no oracle " + algebra + "/" + lemma + " item " +
                           std::to_string(item));
    };

    if (algebra == "two_var_generic" &&
        (lemma == "powers" || lemma == "powers-special" || lemma == "operator-step")) {
        FieldElement q1 = q_of("q1", "2");
        FieldElement q2 = catalog_detail::get_scalar(params, f, "q2", "0");
        FieldElement q3 = catalog_detail::get_scalar(params, f, "q3", "0");
        FieldElement q4 = catalog_detail::get_scalar(params, f, "q4", "1");
        if (lemma == "powers-special" && (!q2.is_zero() || !q3.is_zero()))
            throw BadArgument("oracle 'powers-special' requires q2 = q3 = 0");
        if (lemma == "operator-step" && !q2.is_zero())
            throw BadArgument("oracle 'operator-step' requires q2 = 0");
        const int X = 0, Y = 1;
        if (item == 1) {
            // y x^m
            oc.lhs = engine_product(p, cat({Y}, repeat(X, m)));
            if (lemma == "powers-special") {
                rhs = mono(p, {m, 1}, field_pow(q1, m)) +
                      mono(p, {m - 1, 0}, q4 * power_sum(q1, 1, m));
            } else {
                for (unsigned j = 0; j <= m; ++j)
                    rhs = rhs + mono(p, {m - j, 1},
                                     rat(f, binomial(m, j)) * field_pow(q1, m - j) *
                                         field_pow(q3, j));
                rhs = rhs + mono(p, {m, 0}, q2 * power_sum(q1, 1, m));
                for (unsigned j = 1; j <= m; ++j) {
                    FieldElement s1 = FieldElement::zero(f), s2 = FieldElement::zero(f);
                    for (unsigned i = 0; i + j <= m; ++i)
                        s1 = s1 + rat(f, binomial(i + j - 1, j - 1)) * field_pow(q1, i);
                    for (unsigned i = 0; i + j + 1 <= m; ++i)
                        s2 = s2 + rat(f, binomial(i + j, j)) * field_pow(q1, i);
                    rhs = rhs + mono(p, {m - j, 0},
                                     field_pow(q3, j - 1) * q4 * s1 + q2 * field_pow(q3, j) * s2);
                }
            }
        } else if (item == 2) {
            // y^m x
            oc.lhs = engine_product(p, cat(repeat(Y, m), {X}));
            if (lemma == "powers-special") {
                rhs = mono(p, {1, m}, field_pow(q1, m)) +
                      mono(p, {0, m - 1}, q4 * power_sum(q1, 1, m));
            } else if (lemma == "operator-step") {
                rhs = mono(p, {1, m}, field_pow(q1, m)) +
                      mono(p, {0, m}, q3 * power_sum(q1, 1, m)) +
                      mono(p, {0, m - 1}, q4 * power_sum(q1, 1, m));
            } else {
                for (unsigned j = 0; j <= m; ++j)
                    rhs = rhs + mono(p, {1, m - j},
                                     rat(f, binomial(m, j)) * field_pow(q1, m - j) *
                                         field_pow(q2, j));
                rhs = rhs + mono(p, {0, m}, q3 * power_sum(q1, 1, m));
                for (unsigned j = 1; j <= m; ++j) {
                    FieldElement s1 = FieldElement::zero(f), s2 = FieldElement::zero(f);
                    for (unsigned i = 0; i + j <= m; ++i)
                        s1 = s1 + rat(f, binomial(i + j - 1, j - 1)) * field_pow(q1, i);
                    for (unsigned i = 0; i + j + 1 <= m; ++i)
                        s2 = s2 + rat(f, binomial(i + j, j)) * field_pow(q1, i);
                    rhs = rhs + mono(p, {0, m - j},
                                     field_pow(q2, j - 1) * q4 * s1 + field_pow(q2, j) * q3 * s2);
                }
            }
        } else {
            bad_item();
        }
        oc.rhs = rhs;
        return oc;
    }

    if (algebra == "woronowicz" && lemma == "powers") {
        FieldElement q = q_of("q", "2");
        const int X = 0, Y = 1, Z = 2;
        FieldElement q2p1 = q * q + one;
        // split geometric sum of q^2 appearing in items 1 and 2
        FieldElement cnum = FieldElement::zero(f);
        for (unsigned i = 1; i + 1 <= m; ++i)
            cnum = cnum + rat(f, Rational(static_cast<long>(i))) * field_pow(q, 2 * (static_cast<long>(i) - 1));
        for (unsigned i = m; i + 2 <= 2 * m; ++i)
            cnum = cnum + rat(f, Rational(static_cast<long>(2 * m - 1 - i))) *
                              field_pow(q, 2 * (static_cast<long>(i) - 1));
        switch (item) {
        case 1: // y^m x
            oc.lhs = engine_product(p, cat(repeat(Y, m), {X}));
            rhs = mono(p, {1, m, 0}, field_pow(q, -2 * static_cast<long>(m))) +
                  mono(p, {0, m - 1, 1}, -power_sum(q, 2, m) * q.inverse()) +
                  mono(p, {0, m - 1, 0}, -cnum * field_pow(q, -(2 * static_cast<long>(m) - 1)));
            break;
        case 2: // y x^m
            oc.lhs = engine_product(p, cat({Y}, repeat(X, m)));
            rhs = mono(p, {m, 1, 0}, field_pow(q, -2 * static_cast<long>(m))) +
                  mono(p, {m - 1, 0, 1},
                       -power_sum(q, 2, m) * field_pow(q, -(4 * static_cast<long>(m) - 3))) +
                  mono(p, {m - 1, 0, 0}, cnum * field_pow(q, -(4 * static_cast<long>(m) - 3)));
            break;
        case 3: // z^m x
            oc.lhs = engine_product(p, cat(repeat(Z, m), {X}));
            for (unsigned i = 0; i <= m; ++i) {
                Rational sign = i % 2 ? Rational(-1) : Rational(1);
                rhs = rhs + mono(p, {1, 0, m - i},
                                 rat(f, sign * binomial(m, i)) * field_pow(q2p1, i) *
                                     field_pow(q, -4 * static_cast<long>(m)));
            }
            break;
        case 4: // z x^m (second coefficient negative for every m >= 1)
            oc.lhs = engine_product(p, cat({Z}, repeat(X, m)));
            rhs = mono(p, {m, 0, 1}, field_pow(q, -4 * static_cast<long>(m))) +
                  mono(p, {m, 0, 0},
                       -power_sum(q, 2, 2 * m) * field_pow(q, -4 * static_cast<long>(m)));
            break;
        case 5: // z^m y = y (q^4 z + (q^2+1))^m
            oc.lhs = engine_product(p, cat(repeat(Z, m), {Y}));
            for (unsigned i = 0; i <= m; ++i)
                rhs = rhs + mono(p, {0, 1, i},
                                 rat(f, binomial(m, i)) * field_pow(q, 4 * static_cast<long>(i)) *
                                     field_pow(q2p1, m - i));
            break;
        case 6: // z y^m
            oc.lhs = engine_product(p, cat({Z}, repeat(Y, m)));
            rhs = mono(p, {0, m, 1}, field_pow(q, 4 * static_cast<long>(m))) +
                  mono(p, {0, m, 0}, power_sum(q, 2, 2 * m));
            break;
        default:
            bad_item();
        }
        oc.rhs = rhs;
        return oc;
    }

    if (algebra == "algebra_u" && lemma == "powers") {
        if (catalog_detail::get_uint(params, "n", 1) != 1)
            throw BadArgument("algebra_u oracle is stated per index; use n = 1");
        FieldElement q = q_of("q", "2");
        const int X = 0, Y = 1, Z = 2;
        long M = static_cast<long>(m);
        switch (item) {
        case 1: // z y^m = q^{2m} y^m z - q^2 (sum q^{4i}) x^2 y^{m-1}
            oc.lhs = engine_product(p, cat({Z}, repeat(Y, m)));
            rhs = mono(p, {0, m, 1}, field_pow(q, 2 * M)) +
                  mono(p, {2, m - 1, 0}, -field_pow(q, 2) * power_sum(q, 4, m));
            break;
        case 2: // z^m y = q^{2m} y z^m - q^{2m} (sum q^{-4i}) x^2 z^{m-1}
            oc.lhs = engine_product(p, cat(repeat(Z, m), {Y}));
            rhs = mono(p, {0, 1, m}, field_pow(q, 2 * M)) +
                  mono(p, {2, 0, m - 1}, -field_pow(q, 2 * M) * power_sum(q, -4, m));
            break;
        case 3: // y^m x = q^m x y^m
            oc.lhs = engine_product(p, cat(repeat(Y, m), {X}));
            rhs = mono(p, {1, m, 0}, field_pow(q, M));
            break;
        case 4: // z^m x = q^{-m} x z^m
            oc.lhs = engine_product(p, cat(repeat(Z, m), {X}));
            rhs = mono(p, {1, 0, m}, field_pow(q, -M));
            break;
        default:
            bad_item();
        }
        oc.rhs = rhs;
        return oc;
    }

    if (algebra == "dispin" && lemma == "powers") {
        const int X = 0, Y = 1, Z = 2;
        auto ypoly = [&](long shift, unsigned e, unsigned xd, unsigned zd) {
            // x^xd (y + shift)^e z^zd expanded in the standard basis
            Element r;
            for (unsigned j = 0; j <= e; ++j) {
                Rational s(1);
                for (unsigned t = 0; t + j < e; ++t)
                    s = s * Rational(shift);
                r.add_term({xd, j, zd}, rat(f, binomial(e, j) * s));
            }
            return r;
        };
        switch (item) {
        case 1: // y x^m = x^m y - m x^m
            oc.lhs = engine_product(p, cat({Y}, repeat(X, m)));
            rhs = mono(p, {m, 1, 0}, one) + mono(p, {m, 0, 0}, rat(f, Rational(-(long)m)));
            break;
        case 2: // y^m x = x (y - 1)^m
            oc.lhs = engine_product(p, cat(repeat(Y, m), {X}));
            rhs = ypoly(-1, m, 1, 0);
            break;
        case 3: // y^n x^m = x^m (y - m)^n
            oc.lhs = engine_product(p, cat(repeat(Y, n), repeat(X, m)));
            rhs = ypoly(-(long)m, n, m, 0);
            break;
        case 4: { // z^m x = (-1)^m x z^m - floor(m/2) z^{m-1} + [m odd] y z^{m-1}
            oc.lhs = engine_product(p, cat(repeat(Z, m), {X}));
            Rational sign = m % 2 ? Rational(-1) : Rational(1);
            rhs = mono(p, {1, 0, m}, rat(f, sign)) +
                  mono(p, {0, 0, m - 1}, rat(f, Rational(-(long)(m / 2))));
            if (m % 2)
                rhs = rhs + mono(p, {0, 1, m - 1}, one);
            break;
        }
        case 5: // z y^m = (y - 1)^m z
            oc.lhs = engine_product(p, cat({Z}, repeat(Y, m)));
            rhs = ypoly(-1, m, 0, 1);
            break;
        case 6: // z^m y = (y - m) z^m
            oc.lhs = engine_product(p, cat(repeat(Z, m), {Y}));
            rhs = mono(p, {0, 1, m}, one) + mono(p, {0, 0, m}, rat(f, Rational(-(long)m)));
            break;
        case 7: // z^n y^m = (y - n)^m z^n
            oc.lhs = engine_product(p, cat(repeat(Z, n), repeat(Y, m)));
            rhs = ypoly(-(long)n, m, 0, n);
            break;
        default:
            bad_item();
        }
        oc.rhs = rhs;
        return oc;
    }

    if (algebra == "mq2" && lemma == "powers") {
        FieldElement q = q_of("q", "2");
        FieldElement diff = q - q.inverse();
        // generator order u, v, x, y
        const int U = 0, V = 1, X = 2, Y = 3;
        switch (item) {
        case 1: // y x^m = x^m y - (q - q^-1)(sum q^{2i}) u v x^{m-1}
            oc.lhs = engine_product(p, cat({Y}, repeat(X, m)));
            rhs = mono(p, {0, 0, m, 1}, one) +
                  mono(p, {1, 1, m - 1, 0}, -diff * power_sum(q, 2, m));
            break;
        case 2: // y^m x = x y^m - (q - q^-1)(sum q^{-2i}) u v y^{m-1}
            oc.lhs = engine_product(p, cat(repeat(Y, m), {X}));
            rhs = mono(p, {0, 0, 1, m}, one) +
                  mono(p, {1, 1, 0, m - 1}, -diff * power_sum(q, -2, m));
            break;
        default:
            bad_item();
        }
        (void)U;
        (void)V;
        oc.rhs = rhs;
        return oc;
    }

    if (algebra == "quadratic_a2" && lemma == "powers") {
        FieldElement a = catalog_detail::get_scalar(params, f, "a", "1");
        FieldElement b = catalog_detail::get_scalar(params, f, "b", "1");
        FieldElement c = catalog_detail::get_scalar(params, f, "c", "-1");
        const int X = 0, Y = 1, Z = 2;
        Rational mm(static_cast<long>(m));
        switch (item) {
        case 1: // y x^m = x^m y + m a x^m z + m b x^{m-1} z^2
            oc.lhs = engine_product(p, cat({Y}, repeat(X, m)));
            rhs = mono(p, {m, 1, 0}, one) + mono(p, {m, 0, 1}, rat(f, mm) * a) +
                  mono(p, {m - 1, 0, 2}, rat(f, mm) * b);
            break;
        case 2: // z y^m = sum_i m!/(m-i)! c^i y^{m-i} z^{1+i}
            oc.lhs = engine_product(p, cat({Z}, repeat(Y, m)));
            for (unsigned i = 0; i <= m; ++i) {
                Rational falling = factorial(m) / factorial(m - i);
                rhs = rhs + mono(p, {0, m - i, 1 + i}, rat(f, falling) * field_pow(c, i));
            }
            break;
        case 3: // z^m y = y z^m + m c z^{m+1}
            oc.lhs = engine_product(p, cat(repeat(Z, m), {Y}));
            rhs = mono(p, {0, 1, m}, one) + mono(p, {0, 0, m + 1}, rat(f, mm) * c);
            break;
        default:
            bad_item();
        }
        oc.rhs = rhs;
        return oc;
    }

    throw UnknownLemma("no oracle registered for " + algebra + "/" + lemma);
}

} // namespace skewpbw
