#ifndef GAMMALIN_CYCLOTOMIC_HPP
#define GAMMALIN_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "gammalin/rational.hpp"

namespace gammalin {

/// Element of the cyclotomic field Q(zeta_n), stored as a polynomial in
/// zeta_n of degree < phi(n), reduced mod the n-th cyclotomic polynomial.
/// Order 1 is the rational field itself. Mixed-order arithmetic is an
/// error; embed rationals explicitly via Cyclotomic(order, rational).
class Cyclotomic {
   public:
    /// Zero element of Q(zeta_n).
    explicit Cyclotomic(unsigned order = 1);
    /// Embeds a rational constant into Q(zeta_n).
    Cyclotomic(unsigned order, const Rational& c);
    /// From coefficient vector (any length; reduced mod Phi_n).
    Cyclotomic(unsigned order, std::vector<Rational> coeffs);

    /// The canonical primitive n-th root of unity.
    static Cyclotomic zeta(unsigned n);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// Constant term when the element lies in Q, otherwise nullopt-like
    /// behavior via the bool.
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    Cyclotomic inverse() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Numeric image under zeta_n -> exp(2*pi*i/n).
    std::pair<double, double> to_complex() const;

    /// Polynomial rendering in "zN", e.g. "-1 - z3" or "1/2*z8^3".
    std::string str() const;

    /// Degree of the n-th cyclotomic polynomial.
    static unsigned phi(unsigned n);
    /// Coefficients of Phi_n, ascending degree (integer coefficients).
    static const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

   private:
    void reduce_();

    unsigned order_;
    std::vector<Rational> coeffs_;  // length phi(order_)
};

Cyclotomic pow(const Cyclotomic& base, long e);

}  // namespace gammalin

#endif
