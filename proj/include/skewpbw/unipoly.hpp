#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/rational.hpp"

namespace skewpbw {

/// Univariate polynomial over Q in the formal parameter p.
/// Invariant: leading coefficient nonzero unless the polynomial is zero.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(Rational c) {
        if (!c.is_zero())
            coeffs_.push_back(std::move(c));
    }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly parameter() { return monomial(Rational(1), 1); }

    static UniPoly monomial(Rational c, size_t deg) {
        if (c.is_zero())
            return {};
        std::vector<Rational> v(deg + 1);
        v[deg] = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational &coeff(size_t i) const {
        static const Rational zero;
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    Rational constant_term() const { return coeff(0); }
    Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto &c : r.coeffs_)
            c = -c;
        return r;
    }

    UniPoly operator+(const UniPoly &o) const {
        std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = coeff(i) + o.coeff(i);
        return UniPoly(std::move(v));
    }

    UniPoly operator-(const UniPoly &o) const {
        std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = coeff(i) - o.coeff(i);
        return UniPoly(std::move(v));
    }

    UniPoly operator*(const UniPoly &o) const {
        if (is_zero() || o.is_zero())
            return {};
        std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j)
                v[i + j] += coeffs_[i] * o.coeffs_[j];
        return UniPoly(std::move(v));
    }

    UniPoly operator*(const Rational &c) const {
        UniPoly r = *this;
        for (auto &x : r.coeffs_)
            x *= c;
        r.trim();
        return r;
    }

    bool operator==(const UniPoly &o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly &o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b) {
        if (b.is_zero())
            throw DivisionByZero("polynomial division by zero");
        UniPoly rem = a;
        std::vector<Rational> q;
        int db = b.degree();
        if (rem.degree() >= db)
            q.resize(rem.degree() - db + 1);
        Rational lb_inv = b.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= db) {
            int k = rem.degree() - db;
            Rational c = rem.leading() * lb_inv;
            q[k] = c;
            // rem -= c * p^k * b
            for (int i = 0; i <= db; ++i)
                rem.coeffs_[k + i] -= c * b.coeffs_[i];
            rem.trim();
        }
        return {UniPoly(std::move(q)), rem};
    }

    /// Monic gcd.
    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero())
            return a;
        return a * a.leading().inverse();
    }

    UniPoly monic() const {
        if (is_zero())
            return *this;
        return *this * leading().inverse();
    }

    std::string str(const std::string &var = "p") const {
        if (is_zero())
            return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Rational &c = coeffs_[i];
            if (c.is_zero())
                continue;
            Rational a = c;
            if (!s.empty()) {
                s += (a.sign() < 0) ? " - " : " + ";
                if (a.sign() < 0)
                    a = -a;
            }
            if (i == 0 || !a.is_one())
                s += a.str();
            if (i > 0) {
                if (!a.is_one())
                    s += "*";
                s += var;
                if (i > 1)
                    s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// n-th cyclotomic polynomial, computed as (p^n - 1) / prod_{d|n, d<n} Phi_d.
inline UniPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0)
        throw BadArgument("cyclotomic order must be >= 1");
    static std::map<unsigned, UniPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<Rational> xn(n + 1);
    xn[0] = Rational(-1);
    xn[n] = Rational(1);
    UniPoly num{UniPoly(std::move(xn))};
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        auto [q, r] = UniPoly::divmod(num, cyclotomic_polynomial(d));
        num = std::move(q);
    }
    cache[n] = num;
    return num;
}

} // namespace skewpbw
