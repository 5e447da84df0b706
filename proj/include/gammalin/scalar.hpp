#ifndef GAMMALIN_SCALAR_HPP
#define GAMMALIN_SCALAR_HPP

#include <complex>
#include <string>
#include <variant>

#include "gammalin/cyclotomic.hpp"
#include "gammalin/rational.hpp"

namespace gammalin {

/// Exact scalar: a rational or an element of Q(zeta_n). Rationals embed
/// into any cyclotomic field on demand; two cyclotomic operands of
/// different orders are a field_error.
class Scalar {
   public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(const Rational& r) : v_(r) {}
    Scalar(const Cyclotomic& c) : v_(c) { demote_(); }

    static Scalar zeta(unsigned n) { return Scalar(Cyclotomic::zeta(n)); }

    /// Parses the rendering produced by str(): sums of rational constants
    /// and zN^k powers, e.g. "-4/5", "1 + z3", "1/2*z8^3 - 2".
    static Scalar parse(const std::string& text);

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    /// Field order: 1 for plain rationals.
    unsigned order() const { return is_rational() ? 1 : std::get<Cyclotomic>(v_).order(); }

    const Rational& rational() const { return std::get<Rational>(v_); }
    const Cyclotomic& cyclotomic() const { return std::get<Cyclotomic>(v_); }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order usable as a map key (field order, then coefficients).
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::complex<double> to_complex() const;

    std::string str() const;

   private:
    // Keep rational-valued results in the Rational alternative so equal
    // values compare equal regardless of how they were computed.
    void demote_();

    std::variant<Rational, Cyclotomic> v_;
};

Scalar pow(const Scalar& base, long e);

}  // namespace gammalin

#endif
