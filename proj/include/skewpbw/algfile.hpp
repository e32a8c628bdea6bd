#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/parse.hpp"

namespace skewpbw {

namespace detail {

inline Field parse_field_spec(Lexer &lex) {
    auto t = lex.next();
    if (t.kind != Lexer::Token::Ident)
        lex.fail("expected field name");
    if (t.text == "Q") {
        if (lex.accept_sym('(')) {
            auto v = lex.next();
            if (v.kind != Lexer::Token::Ident || v.text != "p")
                lex.fail("expected 'p'");
            lex.expect_sym(')');
            return Field::Qp();
        }
        return Field::Q();
    }
    if (t.text == "Cyclo") {
        lex.expect_sym('(');
        auto n = lex.next();
        if (n.kind != Lexer::Token::Int)
            lex.fail("expected cyclotomic order");
        lex.expect_sym(')');
        return Field::Cyclo(static_cast<unsigned>(std::stoul(n.text)));
    }
    throw ParseError("unknown field '" + t.text + "'", t.line, t.col);
}

struct RawTerm {
    FieldElement coeff;
    Word word; // letters in written order
};

/// One summand of a relation right-hand side: scalar factors and variables
/// joined by '*' (or '/' before a scalar).
inline RawTerm parse_raw_term(const AlgebraPresentation &p, Lexer &lex) {
    ScalarParser sp(p.field, lex);
    RawTerm t{FieldElement::one(p.field), {}};
    bool neg = false;
    while (lex.accept_sym('-'))
        neg = !neg;
    bool dividing = false;
    for (;;) {
        const auto &tok = lex.peek();
        if (tok.kind == Lexer::Token::Ident && p.index_of(tok.text) >= 0) {
            if (dividing)
                lex.fail("cannot divide by a variable");
            int g = p.index_of(lex.next().text);
            unsigned e = 1;
            if (lex.accept_sym('^')) {
                auto it = lex.next();
                if (it.kind != Lexer::Token::Int)
                    lex.fail("expected integer exponent");
                e = static_cast<unsigned>(std::stoul(it.text));
            }
            for (unsigned k = 0; k < e; ++k)
                t.word.push_back(g);
        } else {
            FieldElement s = sp.parse_factor();
            t.coeff = dividing ? t.coeff / s : t.coeff * s;
        }
        if (lex.accept_sym('*'))
            dividing = false;
        else if (lex.accept_sym('/'))
            dividing = true;
        else
            break;
    }
    if (neg)
        t.coeff = -t.coeff;
    return t;
}

} // namespace detail

/// Line-oriented presentation file:
///   field Q | Q(p) | Cyclo(<n>)
///   vars a b c ...
///   weights w1 w2 ...          (optional, default all 1)
///   rel <v2>*<v1> = <sum of terms>
/// Omitted pairs default to plain commutation.
inline AlgebraPresentation parse_algebra_file(const std::string &text) {
    AlgebraPresentation p;
    bool have_field = false, have_vars = false;
    std::vector<std::pair<int, int>> given;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        Lexer lex(line, lineno);
        if (lex.peek().kind == Lexer::Token::End)
            continue;
        auto kw = lex.next();
        if (kw.kind != Lexer::Token::Ident)
            lex.fail("expected directive");
        if (kw.text == "field") {
            p.field = detail::parse_field_spec(lex);
            have_field = true;
        } else if (kw.text == "vars") {
            while (lex.peek().kind == Lexer::Token::Ident) {
                std::string name = lex.next().text;
                if (p.index_of(name) >= 0)
                    throw ParseError("duplicate variable '" + name + "'", lineno, 1);
                p.generators.push_back({name, 1});
            }
            have_vars = true;
        } else if (kw.text == "weights") {
            size_t i = 0;
            while (lex.peek().kind == Lexer::Token::Int) {
                if (i >= p.generators.size())
                    lex.fail("more weights than variables");
                p.generators[i++].weight = static_cast<unsigned>(std::stoul(lex.next().text));
            }
            if (i != p.generators.size())
                lex.fail("fewer weights than variables");
        } else if (kw.text == "rel") {
            if (!have_field || !have_vars)
                lex.fail("'rel' before 'field'/'vars'");
            auto v2 = lex.next();
            lex.expect_sym('*');
            auto v1 = lex.next();
            if (v2.kind != Lexer::Token::Ident || v1.kind != Lexer::Token::Ident)
                lex.fail("expected variable pair on relation left-hand side");
            int hi = p.index_of(v2.text), lo = p.index_of(v1.text);
            if (hi < 0 || lo < 0)
                lex.fail("unknown variable in relation");
            if (hi <= lo)
                throw InadmissiblePresentation("relation lhs " + v2.text + "*" + v1.text +
                                               " is not a descent (need later*earlier)");
            lex.expect_sym('=');
            std::map<Word, FieldElement> terms;
            for (;;) {
                detail::RawTerm t = detail::parse_raw_term(p, lex);
                auto [it, fresh] = terms.emplace(t.word, t.coeff);
                if (!fresh)
                    it->second = it->second + t.coeff;
                if (lex.accept_sym('+'))
                    continue;
                if (lex.peek().kind == Lexer::Token::Sym && lex.peek().text[0] == '-')
                    continue; // sign starts the next term
                break;
            }
            if (lex.peek().kind != Lexer::Token::End)
                lex.fail("trailing input after relation");
            Word leadw{lo, hi};
            FieldElement lead = FieldElement::zero(p.field);
            if (auto it = terms.find(leadw); it != terms.end()) {
                lead = it->second;
                terms.erase(it);
            }
            p.set_relation(hi, lo, std::move(lead), std::move(terms));
            given.emplace_back(hi, lo);
        } else {
            lex.fail("unknown directive '" + kw.text + "'");
        }
    }
    if (!have_field || !have_vars)
        throw ParseError("file must declare 'field' and 'vars'", lineno, 1);
    for (auto [hi, lo] : given) {
        int count = 0;
        for (auto [h2, l2] : given)
            if (h2 == hi && l2 == lo)
                ++count;
        if (count > 1)
            throw ParseError("duplicate relation for pair", lineno, 1);
    }
    for (int hi = 1; hi < p.num_generators(); ++hi)
        for (int lo = 0; lo < hi; ++lo)
            if (!p.relations().count({hi, lo}))
                p.set_commuting(hi, lo);
    return p;
}

namespace detail {

inline std::string format_rel_term(const AlgebraPresentation &p, const FieldElement &c,
                                   const Word &w) {
    std::string mono;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!mono.empty())
            mono += "*";
        mono += p.generators[w[i]].name;
        if (j - i > 1)
            mono += "^" + std::to_string(j - i);
        i = j;
    }
    std::string cs = c.str();
    if (mono.empty())
        return cs;
    if (cs == "1")
        return mono;
    return cs + "*" + mono;
}

} // namespace detail

/// Canonical rendering; parse_algebra_file(unparse(p)) == p.
inline std::string unparse(const AlgebraPresentation &p) {
    std::string out = "field " + p.field.str() + "\n";
    out += "vars";
    for (const auto &g : p.generators)
        out += " " + g.name;
    out += "\nweights";
    for (const auto &g : p.generators)
        out += " " + std::to_string(g.weight);
    out += "\n";
    for (const auto &[key, r] : p.relations()) {
        out += "rel " + p.generators[r.hi].name + "*" + p.generators[r.lo].name + " = ";
        out += detail::format_rel_term(p, r.lead, Word{r.lo, r.hi});
        for (const auto &[w, c] : r.tail) {
            if (c.str()[0] == '-')
                out += " - " + detail::format_rel_term(p, -c, w);
            else
                out += " + " + detail::format_rel_term(p, c, w);
        }
        out += "\n";
    }
    return out;
}

} // namespace skewpbw
