#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/element.hpp"

namespace skewpbw {

/// Shared tokenizer for scalar literals, element expressions and algebra files.
class Lexer {
  public:
    struct Token {
        enum Kind { Int, Ident, Sym, End } kind;
        std::string text;
        int line, col;
    };

    explicit Lexer(const std::string &src, int line = 1) : src_(src), line_(line) { advance(); }

    const Token &peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    bool accept_sym(char c) {
        if (tok_.kind == Token::Sym && tok_.text[0] == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect_sym(char c) {
        if (!accept_sym(c))
            fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg + " (got '" + (tok_.kind == Token::End ? "<end>" : tok_.text) + "')",
                         tok_.line, tok_.col);
    }

  private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t'))
            ++pos_;
        tok_.line = line_;
        tok_.col = static_cast<int>(pos_) + 1;
        if (pos_ >= src_.size() || src_[pos_] == '#') {
            tok_ = {Token::End, "", line_, tok_.col};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t s = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            tok_ = {Token::Int, src_.substr(s, pos_ - s), line_, tok_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t s = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Ident, src_.substr(s, pos_ - s), line_, tok_.col};
            return;
        }
        ++pos_;
        tok_ = {Token::Sym, std::string(1, c), line_, tok_.col};
    }

    std::string src_;
    size_t pos_ = 0;
    int line_;
    Token tok_;
};

/// Recursive-descent evaluator for element expressions over a presentation.
/// Scalars use the shared literal syntax (integers, fractions, p, powers,
/// parenthesized polynomial expressions); identifiers name generators.
class ExprParser {
  public:
    ExprParser(const AlgebraPresentation &p, Lexer &lex) : p_(p), lex_(lex) {}

    Element parse_expr() {
        Element acc = parse_term();
        for (;;) {
            if (lex_.accept_sym('+'))
                acc = acc + parse_term();
            else if (lex_.accept_sym('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

  private:
    Element parse_term() {
        Element acc = parse_factor();
        for (;;) {
            if (lex_.accept_sym('*')) {
                acc = el_mul(p_, acc, parse_factor());
            } else if (lex_.accept_sym('/')) {
                Element d = parse_factor();
                acc = acc.scaled(scalar_of(d).inverse());
            } else {
                return acc;
            }
        }
    }

    Element parse_factor() {
        bool neg = false;
        while (lex_.accept_sym('-'))
            neg = !neg;
        Element a = parse_atom();
        if (lex_.accept_sym('^')) {
            auto t = lex_.next();
            if (t.kind != Lexer::Token::Int)
                lex_.fail("expected integer exponent");
            unsigned long e = std::stoul(t.text);
            Element r = Element::one(p_);
            for (unsigned long i = 0; i < e; ++i)
                r = el_mul(p_, r, a);
            a = std::move(r);
        }
        return neg ? -a : a;
    }

    Element parse_atom() {
        const auto &t = lex_.peek();
        if (t.kind == Lexer::Token::Int) {
            Rational v = Rational::from_string(lex_.next().text);
            return Element::scalar(p_, FieldElement::make(p_.field, v));
        }
        if (t.kind == Lexer::Token::Ident) {
            auto id = lex_.next();
            int g = p_.index_of(id.text);
            if (g >= 0)
                return Element::generator(p_, g);
            if (id.text == "p" && p_.field.kind != FieldKind::Rationals)
                return Element::scalar(p_, FieldElement::parameter(p_.field));
            throw ParseError("unknown identifier '" + id.text + "'", id.line, id.col);
        }
        if (t.kind == Lexer::Token::Sym && t.text[0] == '(') {
            lex_.next();
            Element e = parse_expr();
            lex_.expect_sym(')');
            return e;
        }
        lex_.fail("expected term");
    }

    FieldElement scalar_of(const Element &e) {
        if (e.is_zero())
            return FieldElement::zero(p_.field);
        if (e.num_terms() != 1 || total_degree(e.terms().begin()->first) != 0)
            throw Error("division by a non-scalar element");
        return e.terms().begin()->second;
    }

    const AlgebraPresentation &p_;
    Lexer &lex_;
};

/// Scalar-only recursive descent producing a FieldElement; used where
/// variables are not allowed (relation coefficients, parameter values).
class ScalarParser {
  public:
    ScalarParser(const Field &f, Lexer &lex) : f_(f), lex_(lex) {}

    FieldElement parse_expr() {
        FieldElement acc = parse_term();
        for (;;) {
            if (lex_.accept_sym('+'))
                acc = acc + parse_term();
            else if (lex_.accept_sym('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    FieldElement parse_factor() {
        bool neg = false;
        while (lex_.accept_sym('-'))
            neg = !neg;
        FieldElement a = parse_atom();
        if (lex_.accept_sym('^')) {
            auto t = lex_.next();
            if (t.kind != Lexer::Token::Int)
                lex_.fail("expected integer exponent");
            a = field_pow(a, std::stol(t.text));
        }
        return neg ? -a : a;
    }

  private:
    FieldElement parse_term() {
        FieldElement acc = parse_factor();
        for (;;) {
            if (lex_.accept_sym('*'))
                acc = acc * parse_factor();
            else if (lex_.accept_sym('/'))
                acc = acc / parse_factor();
            else
                return acc;
        }
    }

    FieldElement parse_atom() {
        const auto &t = lex_.peek();
        if (t.kind == Lexer::Token::Int)
            return FieldElement::make(f_, Rational::from_string(lex_.next().text));
        if (t.kind == Lexer::Token::Ident && t.text == "p" && f_.kind != FieldKind::Rationals) {
            lex_.next();
            return FieldElement::parameter(f_);
        }
        if (t.kind == Lexer::Token::Sym && t.text[0] == '(') {
            lex_.next();
            FieldElement e = parse_expr();
            lex_.expect_sym(')');
            return e;
        }
        lex_.fail("expected scalar");
    }

    const Field &f_;
    Lexer &lex_;
};

inline Element parse_element(const AlgebraPresentation &p, const std::string &text) {
    Lexer lex(text);
    ExprParser ep(p, lex);
    Element e = ep.parse_expr();
    if (lex.peek().kind != Lexer::Token::End)
        lex.fail("trailing input");
    return e;
}

/// Scalar-only literal, e.g. "-12", "3/4", "p^3", "(p^2-1)/(p+1)".
inline FieldElement parse_scalar(const Field &f, const std::string &text) {
    Lexer lex(text);
    ScalarParser sp(f, lex);
    FieldElement e = sp.parse_expr();
    if (lex.peek().kind != Lexer::Token::End)
        lex.fail("trailing input");
    return e;
}

} // namespace skewpbw
