#pragma once

#include <string>
#include <utility>
#include <variant>

#include "skewpbw/unipoly.hpp"

namespace skewpbw {

enum class FieldKind { Rationals, RationalFunctions, Cyclotomic };

/// Coefficient field descriptor: Q, Q(p), or Q(zeta_n) = Q[p]/Phi_n(p).
struct Field {
    FieldKind kind = FieldKind::Rationals;
    unsigned cyclo_order = 0;

    static Field Q() { return {FieldKind::Rationals, 0}; }
    static Field Qp() { return {FieldKind::RationalFunctions, 0}; }
    static Field Cyclo(unsigned n) {
        if (n == 0)
            throw BadArgument("cyclotomic order must be >= 1");
        return {FieldKind::Cyclotomic, n};
    }

    bool operator==(const Field &o) const = default;

    std::string str() const {
        switch (kind) {
        case FieldKind::Rationals:
            return "Q";
        case FieldKind::RationalFunctions:
            return "Q(p)";
        case FieldKind::Cyclotomic:
            return "Cyclo(" + std::to_string(cyclo_order) + ")";
        }
        return "?";
    }
};

/// Exact scalar in one of the three supported fields.
class FieldElement {
  public:
    struct RatFun {
        UniPoly num;
        UniPoly den; // monic, gcd(num, den) = 1, nonzero
    };
    struct CycloElt {
        UniPoly residue; // deg < deg(Phi_n)
        unsigned order;
    };

    FieldElement() : v_(Rational()) {}

    static FieldElement make(const Field &f, Rational c) {
        switch (f.kind) {
        case FieldKind::Rationals:
            return FieldElement(std::move(c));
        case FieldKind::RationalFunctions:
            return FieldElement(RatFun{UniPoly(std::move(c)), UniPoly(Rational(1))});
        case FieldKind::Cyclotomic:
            return from_poly(f, UniPoly(std::move(c)));
        }
        throw Error("bad field kind");
    }

    static FieldElement zero(const Field &f) { return make(f, Rational(0)); }
    static FieldElement one(const Field &f) { return make(f, Rational(1)); }

    /// The formal parameter p (class of p mod Phi_n in the cyclotomic case).
    static FieldElement parameter(const Field &f) {
        if (f.kind == FieldKind::Rationals)
            throw Error("field Q has no formal parameter");
        return from_poly(f, UniPoly::parameter());
    }

    /// Embed a polynomial in p (reduces mod Phi_n for cyclotomic fields).
    static FieldElement from_poly(const Field &f, UniPoly poly) {
        switch (f.kind) {
        case FieldKind::Rationals:
            if (!poly.is_constant())
                throw Error("nonconstant polynomial over Q");
            return FieldElement(poly.constant_term());
        case FieldKind::RationalFunctions:
            return FieldElement(RatFun{std::move(poly), UniPoly(Rational(1))});
        case FieldKind::Cyclotomic: {
            UniPoly phi = cyclotomic_polynomial(f.cyclo_order);
            return FieldElement(CycloElt{UniPoly::divmod(poly, phi).second, f.cyclo_order});
        }
        }
        throw Error("bad field kind");
    }

    Field field() const {
        if (std::holds_alternative<Rational>(v_))
            return Field::Q();
        if (std::holds_alternative<RatFun>(v_))
            return Field::Qp();
        return Field::Cyclo(std::get<CycloElt>(v_).order);
    }

    bool is_zero() const {
        if (auto *r = std::get_if<Rational>(&v_))
            return r->is_zero();
        if (auto *f = std::get_if<RatFun>(&v_))
            return f->num.is_zero();
        return std::get<CycloElt>(v_).residue.is_zero();
    }

    bool is_one() const {
        if (auto *r = std::get_if<Rational>(&v_))
            return r->is_one();
        if (auto *f = std::get_if<RatFun>(&v_))
            return f->num.is_one() && f->den.is_one();
        return std::get<CycloElt>(v_).residue.is_one();
    }

    FieldElement operator-() const {
        if (auto *r = std::get_if<Rational>(&v_))
            return FieldElement(-*r);
        if (auto *f = std::get_if<RatFun>(&v_))
            return FieldElement(RatFun{-f->num, f->den});
        const auto &c = std::get<CycloElt>(v_);
        return FieldElement(CycloElt{-c.residue, c.order});
    }

    FieldElement operator+(const FieldElement &o) const {
        check_same(o);
        if (auto *r = std::get_if<Rational>(&v_))
            return FieldElement(*r + std::get<Rational>(o.v_));
        if (auto *f = std::get_if<RatFun>(&v_)) {
            const auto &g = std::get<RatFun>(o.v_);
            return reduce_fraction(f->num * g.den + g.num * f->den, f->den * g.den);
        }
        const auto &a = std::get<CycloElt>(v_);
        const auto &b = std::get<CycloElt>(o.v_);
        return FieldElement(CycloElt{a.residue + b.residue, a.order});
    }

    FieldElement operator-(const FieldElement &o) const { return *this + (-o); }

    FieldElement operator*(const FieldElement &o) const {
        check_same(o);
        if (auto *r = std::get_if<Rational>(&v_))
            return FieldElement(*r * std::get<Rational>(o.v_));
        if (auto *f = std::get_if<RatFun>(&v_)) {
            const auto &g = std::get<RatFun>(o.v_);
            return reduce_fraction(f->num * g.num, f->den * g.den);
        }
        const auto &a = std::get<CycloElt>(v_);
        const auto &b = std::get<CycloElt>(o.v_);
        UniPoly phi = cyclotomic_polynomial(a.order);
        return FieldElement(CycloElt{UniPoly::divmod(a.residue * b.residue, phi).second, a.order});
    }

    FieldElement inverse() const {
        if (is_zero())
            throw DivisionByZero("inverse of zero field element");
        if (auto *r = std::get_if<Rational>(&v_))
            return FieldElement(r->inverse());
        if (auto *f = std::get_if<RatFun>(&v_)) {
            Rational lc = f->num.leading();
            return FieldElement(RatFun{f->den * lc.inverse(), f->num * lc.inverse()});
        }
        // extended Euclid of residue against Phi_n
        const auto &c = std::get<CycloElt>(v_);
        UniPoly phi = cyclotomic_polynomial(c.order);
        UniPoly r0 = phi, r1 = c.residue;
        UniPoly s0, s1{Rational(1)};
        while (!r1.is_zero()) {
            auto [q, r2] = UniPoly::divmod(r0, r1);
            UniPoly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd = nonzero constant (Phi_n irreducible, residue nonzero of lower degree)
        UniPoly inv = s0 * r0.constant_term().inverse();
        return FieldElement(CycloElt{UniPoly::divmod(inv, phi).second, c.order});
    }

    FieldElement operator/(const FieldElement &o) const { return *this * o.inverse(); }

    bool operator==(const FieldElement &o) const {
        if (v_.index() != o.v_.index())
            return false;
        if (auto *r = std::get_if<Rational>(&v_))
            return *r == std::get<Rational>(o.v_);
        if (auto *f = std::get_if<RatFun>(&v_)) {
            const auto &g = std::get<RatFun>(o.v_);
            return f->num == g.num && f->den == g.den;
        }
        const auto &a = std::get<CycloElt>(v_);
        const auto &b = std::get<CycloElt>(o.v_);
        return a.order == b.order && a.residue == b.residue;
    }
    bool operator!=(const FieldElement &o) const { return !(*this == o); }

    /// Ordering for deterministic output only.
    bool operator<(const FieldElement &o) const { return str() < o.str(); }

    const Rational *as_rational() const { return std::get_if<Rational>(&v_); }
    const RatFun *as_ratfun() const { return std::get_if<RatFun>(&v_); }
    const CycloElt *as_cyclo() const { return std::get_if<CycloElt>(&v_); }

    /// Parseable rendering using the shared scalar literal syntax.
    std::string str() const {
        if (auto *r = std::get_if<Rational>(&v_))
            return r->str();
        const UniPoly *num, *den = nullptr;
        if (auto *f = std::get_if<RatFun>(&v_)) {
            num = &f->num;
            if (!f->den.is_one())
                den = &f->den;
        } else {
            num = &std::get<CycloElt>(v_).residue;
        }
        std::string s;
        if (num->is_constant())
            s = num->constant_term().str();
        else
            s = "(" + num->str() + ")";
        if (den) {
            if (den->is_constant())
                s += "/" + den->constant_term().str();
            else
                s += "/(" + den->str() + ")";
        }
        return s;
    }

  private:
    explicit FieldElement(Rational r) : v_(std::move(r)) {}
    explicit FieldElement(RatFun f) : v_(std::move(f)) {}
    explicit FieldElement(CycloElt c) : v_(std::move(c)) {}

    static FieldElement reduce_fraction(UniPoly num, UniPoly den) {
        if (den.is_zero())
            throw DivisionByZero("zero denominator");
        if (num.is_zero())
            return FieldElement(RatFun{UniPoly(), UniPoly(Rational(1))});
        UniPoly g = UniPoly::gcd(num, den);
        num = UniPoly::divmod(num, g).first;
        den = UniPoly::divmod(den, g).first;
        Rational lc = den.leading();
        if (!lc.is_one()) {
            Rational inv = lc.inverse();
            num = num * inv;
            den = den * inv;
        }
        return FieldElement(RatFun{std::move(num), std::move(den)});
    }

    void check_same(const FieldElement &o) const {
        if (v_.index() != o.v_.index())
            throw FieldMismatch("mixed field elements");
        if (auto *a = std::get_if<CycloElt>(&v_))
            if (a->order != std::get<CycloElt>(o.v_).order)
                throw FieldMismatch("mixed cyclotomic orders");
    }

    std::variant<Rational, RatFun, CycloElt> v_;
};

/// sum_{i=0}^{m-1} a^i, by repeated addition (safe at a = 1).
inline FieldElement geometric_sum(const FieldElement &a, unsigned m) {
    FieldElement acc = FieldElement::zero(a.field());
    FieldElement pw = FieldElement::one(a.field());
    for (unsigned i = 0; i < m; ++i) {
        acc = acc + pw;
        pw = pw * a;
    }
    return acc;
}

inline FieldElement field_pow(const FieldElement &a, long e) {
    FieldElement base = e < 0 ? a.inverse() : a;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    FieldElement r = FieldElement::one(a.field());
    for (unsigned long i = 0; i < n; ++i)
        r = r * base;
    return r;
}

} // namespace skewpbw
