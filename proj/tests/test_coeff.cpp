#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skewpbw/field.hpp"
#include "skewpbw/parse.hpp"

using namespace skewpbw;

namespace {

FieldElement random_element(const Field &f, std::mt19937 &rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    auto r = [&] { return Rational(num(rng), den(rng)); };
    switch (f.kind) {
    case FieldKind::Rationals:
        return FieldElement::make(f, r());
    case FieldKind::RationalFunctions: {
        FieldElement p = FieldElement::parameter(f);
        FieldElement v = FieldElement::make(f, r());
        v = v + FieldElement::make(f, r()) * p;
        v = v + FieldElement::make(f, r()) * p * p;
        return v;
    }
    case FieldKind::Cyclotomic: {
        FieldElement p = FieldElement::parameter(f);
        FieldElement v = FieldElement::make(f, r());
        v = v + FieldElement::make(f, r()) * p;
        return v;
    }
    }
    return FieldElement::zero(f);
}

} // namespace

TEST_CASE("rational arithmetic canonical values", "[coeff]") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK(Rational(7, 3).inverse() == Rational(3, 7));
    CHECK(Rational::from_string("-22/4").str() == "-11/2");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
    CHECK(binomial(8, 3) == Rational(56));
    CHECK(factorial(6) == Rational(720));
}

TEST_CASE("univariate polynomial division and gcd", "[coeff]") {
    UniPoly p = UniPoly::parameter();
    UniPoly a = p * p * p - UniPoly(Rational(1));         // p^3 - 1
    UniPoly b = p - UniPoly(Rational(1));                 // p - 1
    auto [q, r] = UniPoly::divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == p * p + p + UniPoly(Rational(1)));
    CHECK(UniPoly::gcd(a, p * p - UniPoly(Rational(1))) == b); // gcd monic
    CHECK(UniPoly::divmod(b, a).first.is_zero());
}

TEST_CASE("cyclotomic polynomials", "[coeff]") {
    UniPoly p = UniPoly::parameter();
    CHECK(cyclotomic_polynomial(1) == p - UniPoly(Rational(1)));
    CHECK(cyclotomic_polynomial(2) == p + UniPoly(Rational(1)));
    CHECK(cyclotomic_polynomial(4) == p * p + UniPoly(Rational(1)));
    CHECK(cyclotomic_polynomial(6) == p * p - p + UniPoly(Rational(1)));
    UniPoly phi12 = p * p * p * p - p * p + UniPoly(Rational(1));
    CHECK(cyclotomic_polynomial(12) == phi12);

    for (unsigned n = 1; n <= 30; ++n) {
        UniPoly pn = UniPoly::monomial(Rational(1), n) - UniPoly(Rational(1)); // p^n - 1
        // Phi_n divides p^n - 1, and the product of Phi_d over divisors d is p^n - 1
        CHECK(UniPoly::divmod(pn, cyclotomic_polynomial(n)).second.is_zero());
        UniPoly prod(Rational(1));
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0)
                prod = prod * cyclotomic_polynomial(d);
        CHECK(prod == pn);
    }
}

TEST_CASE("field axioms hold on random triples", "[coeff]") {
    std::mt19937 rng(20240817);
    for (Field f : {Field::Q(), Field::Qp(), Field::Cyclo(5)}) {
        FieldElement one = FieldElement::one(f), zero = FieldElement::zero(f);
        for (int i = 0; i < 1000; ++i) {
            FieldElement a = random_element(f, rng), b = random_element(f, rng),
                         c = random_element(f, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + zero == a);
            REQUIRE(a * one == a);
            REQUIRE((a - a).is_zero());
            if (!a.is_zero()) {
                REQUIRE(a * a.inverse() == one);
                REQUIRE((one / a) * a == one);
            }
        }
    }
}

TEST_CASE("cyclotomic units and geometric sums", "[coeff]") {
    // In Q(zeta_4), the inverse of p is -p since p * (-p) = -p^2 = 1 mod p^2+1.
    Field f4 = Field::Cyclo(4);
    FieldElement z = FieldElement::parameter(f4);
    CHECK(z.inverse() == -z);
    CHECK(z * (-z) == FieldElement::one(f4));

    for (unsigned n = 2; n <= 12; ++n) {
        Field f = Field::Cyclo(n);
        FieldElement z_n = FieldElement::parameter(f);
        CHECK(geometric_sum(z_n, n).is_zero());
        CHECK(field_pow(z_n, static_cast<long>(n)) == FieldElement::one(f));
    }
    // geometric_sum is safe at a = 1
    CHECK(geometric_sum(FieldElement::one(Field::Q()), 7) ==
          FieldElement::make(Field::Q(), Rational(7)));
}

TEST_CASE("rational function normalization", "[coeff]") {
    Field f = Field::Qp();
    FieldElement p = FieldElement::parameter(f);
    FieldElement one = FieldElement::one(f);
    // (p^2-1)/(p+1) reduces to p-1
    FieldElement v = (p * p - one) / (p + one);
    CHECK(v == p - one);
    // denominators are kept monic: 1/(2p+2) has monic denominator p+1
    FieldElement w = one / (FieldElement::make(f, Rational(2)) * p + FieldElement::make(f, Rational(2)));
    const auto *rf = w.as_ratfun();
    REQUIRE(rf != nullptr);
    CHECK(rf->den == UniPoly::parameter() + UniPoly(Rational(1)));
    CHECK(rf->num == UniPoly(Rational(1, 2)));
}

TEST_CASE("scalar literal parsing round trip", "[coeff]") {
    Field fp = Field::Qp();
    for (const char *lit : {"-12", "3/4", "p^3", "(p^2 - 1)/(p + 1)", "(2*p + 1)/(p^2 + 3)"}) {
        FieldElement v = parse_scalar(fp, lit);
        CHECK(parse_scalar(fp, v.str()) == v);
    }
    CHECK(parse_scalar(fp, "(p^2-1)/(p+1)") == parse_scalar(fp, "p - 1"));
    CHECK(parse_scalar(Field::Q(), "3/4") == FieldElement::make(Field::Q(), Rational(3, 4)));
    CHECK_THROWS_AS(parse_scalar(Field::Q(), "p"), ParseError);
    CHECK_THROWS_AS(parse_scalar(Field::Q(), "3/"), ParseError);
    Field f6 = Field::Cyclo(6);
    // p^6 = 1 in Q(zeta_6), so p^7 = p
    CHECK(parse_scalar(f6, "p^7") == FieldElement::parameter(f6));
}

TEST_CASE("mixed-field operations are rejected", "[coeff]") {
    FieldElement a = FieldElement::one(Field::Q());
    FieldElement b = FieldElement::parameter(Field::Qp());
    FieldElement c = FieldElement::parameter(Field::Cyclo(3));
    FieldElement d = FieldElement::parameter(Field::Cyclo(4));
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(b * c, FieldMismatch);
    CHECK_THROWS_AS(c + d, FieldMismatch);
}
