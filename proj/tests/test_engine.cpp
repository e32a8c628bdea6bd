#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skewpbw/algfile.hpp"
#include "skewpbw/catalog.hpp"

using namespace skewpbw;

namespace {

Element random_element(const AlgebraPresentation &p, std::mt19937 &rng) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<size_t> pick(0, 1);
    auto monos = monomials_up_to(p, 3);
    std::uniform_int_distribution<size_t> which(0, monos.size() - 1);
    Element e;
    for (int t = 0; t < 3; ++t)
        e = e + Element::monomial(p, monos[which(rng)],
                                  FieldElement::make(p.field, Rational(coeff(rng))));
    return e;
}

} // namespace

TEST_CASE("algebra file parsing and validation", "[engine]") {
    AlgebraPresentation weyl = parse_algebra_file("field Q\nvars t x\nrel x*t = t*x + 1\n");
    CHECK(weyl.is_valid());
    CHECK(weyl.num_generators() == 2);
    CHECK(weyl.relation(1, 0).lead.is_one());

    // omitted pairs default to commuting
    AlgebraPresentation three = parse_algebra_file("field Q\nvars x y z\nrel z*y = y*z + x\n");
    CHECK(three.is_valid());
    CHECK(three.relation(1, 0).lead.is_one());
    CHECK(three.relation(1, 0).tail.empty());

    // a weight-heavy tail is inadmissible under unit weights but fine with the
    // right weight vector
    const char *quad = "field Q\nvars x y z\n{W}rel y*x = x*y + x + x^2*z\nrel z*y = y*z - x^2*z\n";
    auto with = [&](const std::string &w) {
        std::string s(quad);
        s.replace(s.find("{W}"), 3, w);
        return s;
    };
    CHECK_THROWS_AS(parse_algebra_file(with("")).require_valid(), InadmissiblePresentation);
    CHECK(parse_algebra_file(with("weights 1 4 2\n")).is_valid());

    // relation lhs must be a descent (later generator times earlier one)
    CHECK_THROWS_AS(parse_algebra_file("field Q\nvars t x\nrel t*x = x*t + 1\n"),
                    InadmissiblePresentation);
    // zero leading coefficient
    CHECK_FALSE(parse_algebra_file("field Q\nvars t x\nrel x*t = 1\n").is_valid());
    CHECK_THROWS_AS(parse_algebra_file("vars t x\nrel x*t = t*x\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("field Q\nvars t x\nrel x*t = t*x\nrel x*t = t*x + 1\n"),
                    ParseError);
}

TEST_CASE("unparse round trip on the whole catalog", "[engine]") {
    for (const auto &l : Catalog::instance().list()) {
        AlgebraPresentation p = Catalog::instance().build(l.id);
        AlgebraPresentation q = parse_algebra_file(unparse(p));
        INFO(l.id);
        CHECK(p == q);
    }
}

TEST_CASE("normal forms in the Weyl algebra", "[engine]") {
    AlgebraPresentation p = Catalog::instance().build("weyl", {{"n", "1"}});
    int t = p.index_of("t"), x = p.index_of("x");
    REQUIRE(t >= 0);
    REQUIRE(x >= 0);
    // x t = t x + 1
    Element xt = normalize_word(p, {x, t});
    CHECK(xt == parse_element(p, "t*x + 1"));
    // x t^2 = t^2 x + 2 t
    CHECK(normalize_word(p, {x, t, t}) == parse_element(p, "t^2*x + 2*t"));
    // x^2 t^2 = t^2 x^2 + 4 t x + 2
    CHECK(normalize_word(p, {x, x, t, t}) == parse_element(p, "t^2*x^2 + 4*t*x + 2"));
}

TEST_CASE("normalization is idempotent and standard words are free", "[engine]") {
    for (const char *id : {"weyl", "dispin", "usl2", "woronowicz"}) {
        AlgebraPresentation p = Catalog::instance().build(id);
        for (const Exponents &e : monomials_up_to(p, 3)) {
            // standard word: already in normal form, single term, coefficient 1
            Element nf = normalize_word(p, monomial_word(e));
            REQUIRE(nf.num_terms() == 1);
            REQUIRE(nf.coeff(p, e).is_one());
        }
        // normalizing the terms of a normal form is the identity
        Element f = el_mul(p, parse_element(p, p.generators[2 % p.num_generators()].name),
                           parse_element(p, p.generators[0].name + "^2"));
        std::vector<std::pair<Word, FieldElement>> raw;
        for (const auto &[e, c] : f.terms())
            raw.emplace_back(monomial_word(e), c);
        CHECK(normalize(p, raw) == f);
    }
}

TEST_CASE("multiplication is associative on random triples", "[engine]") {
    std::mt19937 rng(987654321);
    const char *ids[] = {"weyl",       "dispin", "usl2",         "woronowicz",
                         "mq2",        "qheisenberg", "quadratic_a2", "uprime_so3"};
    for (const char *id : ids) {
        AlgebraPresentation p = Catalog::instance().build(id);
        for (int trial = 0; trial < 25; ++trial) {
            Element a = random_element(p, rng), b = random_element(p, rng),
                    c = random_element(p, rng);
            INFO(id << " trial " << trial);
            REQUIRE(el_mul(p, el_mul(p, a, b), c) == el_mul(p, a, el_mul(p, b, c)));
        }
    }
}

TEST_CASE("degree of a product is bounded by the sum of degrees", "[engine]") {
    std::mt19937 rng(13579);
    for (const char *id : {"weyl", "usl2", "woronowicz", "qheisenberg"}) {
        AlgebraPresentation p = Catalog::instance().build(id);
        for (int trial = 0; trial < 20; ++trial) {
            Element a = random_element(p, rng), b = random_element(p, rng);
            Element ab = el_mul(p, a, b);
            if (a.is_zero() || b.is_zero())
                CHECK(ab.is_zero());
            else
                CHECK(ab.degree() <= a.degree() + b.degree());
        }
    }
}

TEST_CASE("rewrite budget is enforced", "[engine]") {
    AlgebraPresentation p = Catalog::instance().build("usl2");
    Element f = parse_element(p, "z^3");
    Element g = parse_element(p, "x^3*y^3");
    CHECK_THROWS_AS(el_mul(p, f, g, RewriteBudget{5}), BudgetExceeded);
    CHECK_NOTHROW(el_mul(p, f, g));
}

TEST_CASE("monomial enumeration counts and order", "[engine]") {
    AlgebraPresentation p2 = parse_algebra_file("field Q\nvars x y\n");
    auto ms = monomials_up_to(p2, 2);
    // C(2+2,2) = 6, graded then x-heavy first
    std::vector<Exponents> want = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(ms == want);

    AlgebraPresentation p3 = parse_algebra_file("field Q\nvars x y z\n");
    for (unsigned D = 0; D <= 4; ++D) {
        auto v = monomials_up_to(p3, D);
        // C(3+D,3)
        unsigned long expect = (D + 1) * (D + 2) * (D + 3) / 6;
        CHECK(v.size() == expect);
        MonomialOrder lt;
        for (size_t i = 1; i < v.size(); ++i)
            REQUIRE(lt(v[i - 1], v[i]));
    }
}

TEST_CASE("element parser and printer round trip", "[engine]") {
    AlgebraPresentation p = Catalog::instance().build("woronowicz");
    for (const char *s : {"x", "3*x*y - z^2", "(p^2 - 1)*x*y*z + p*x", "x*y - y*x",
                          "(x + y)*(x - y)", "-x^3 + 1/2"}) {
        Element e = parse_element(p, s);
        CHECK(parse_element(p, e.str(p)) == e);
    }
    CHECK(parse_element(p, "x*y - x*y").is_zero());
    CHECK(Element::zero().str(p) == "0");
    CHECK_THROWS_AS(parse_element(p, "x + w"), ParseError);
    CHECK_THROWS_AS(parse_element(p, "x +"), ParseError);
}
