#ifndef GAMMALIN_RATIONAL_HPP
#define GAMMALIN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "gammalin/errors.hpp"

namespace gammalin {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin wrapper over GMP's mpq_class that pins the canonical
/// form and the "p/q" rendering.
class Rational {
   public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw division_by_zero("rational with zero denominator");
        value_ = mpq_class(n, d);
        value_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : value_(n) {}
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading minus).
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        return Rational(mpq_class(1) / value_);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

    double to_double() const { return value_.get_d(); }

    /// "p/q", the "/q" omitted when the denominator is 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

   private:
    mpq_class value_;
};

/// n-th power with integer exponent (negative allowed when base nonzero).
Rational pow(const Rational& base, long e);

}  // namespace gammalin

#endif
