#pragma once

#include <gmpxx.h>

#include <string>

#include "skewpbw/errors.hpp"

namespace skewpbw {

/// Exact rational number. Canonical form: denominator > 0, gcd(|num|, den) = 1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0)
            throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class &v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class &n) : v_(n) {}

    static Rational from_string(const std::string &s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw Error("bad rational literal: " + s);
        v.canonicalize();
        return Rational(v);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational &o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational &o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational &o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational &o) const {
        if (o.is_zero())
            throw DivisionByZero("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational &operator+=(const Rational &o) {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        v_ *= o.v_;
        return *this;
    }

    Rational inverse() const {
        if (is_zero())
            throw DivisionByZero("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational &o) const { return v_ == o.v_; }
    bool operator!=(const Rational &o) const { return v_ != o.v_; }
    bool operator<(const Rational &o) const { return v_ < o.v_; }

    /// "3", "-2/5"
    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

inline Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

} // namespace skewpbw
