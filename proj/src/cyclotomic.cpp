#include "gammalin/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace gammalin {

namespace {

using Poly = std::vector<Rational>;  // ascending degree, no trailing zeros required

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(Poly num, Poly den) {
    trim(num);
    trim(den);
    if (den.empty()) throw division_by_zero("polynomial division by zero");
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    const Rational lead = den.back();
    while (num.size() >= den.size()) {
        Rational c = num.back() / lead;
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    trim(q);
    return {q, num};
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

}  // namespace

unsigned Cyclotomic::phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rational>& Cyclotomic::cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so
    // recursion never re-enters the lock.
    for (unsigned d : divisors(n)) {
        if (cache.count(d)) continue;
        Poly num(d + 1, Rational(0));
        num[0] = Rational(-1);
        num[d] = Rational(1);
        for (unsigned e : divisors(d)) {
            if (e == d) continue;
            auto [q, r] = divmod(num, cache.at(e));
            if (!r.empty()) throw error("internal: cyclotomic polynomial division not exact");
            num = q;
        }
        cache.emplace(d, num);
    }
    return cache.at(n);
}

Cyclotomic::Cyclotomic(unsigned order) : Cyclotomic(order, Rational(0)) {}

Cyclotomic::Cyclotomic(unsigned order, const Rational& c) : order_(order) {
    if (order == 0) throw domain_error("cyclotomic order must be positive");
    coeffs_.assign(phi(order), Rational(0));
    coeffs_[0] = c;
    if (order == 1) coeffs_[0] = c;  // phi(1) = 1
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order == 0) throw domain_error("cyclotomic order must be positive");
    reduce_();
}

Cyclotomic Cyclotomic::zeta(unsigned n) {
    if (n == 0) throw domain_error("zeta: order must be positive");
    std::vector<Rational> c(2, Rational(0));
    c[1] = Rational(1);
    return Cyclotomic(n, std::move(c));
}

void Cyclotomic::reduce_() {
    const Poly& modulus = cyclotomic_polynomial(order_);
    unsigned deg = phi(order_);
    Poly p = coeffs_;
    trim(p);
    if (p.size() > deg) {
        auto [q, r] = divmod(p, modulus);
        (void)q;
        p = r;
    }
    p.resize(deg, Rational(0));
    coeffs_ = p;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw domain_error("cyclotomic element is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {
void check_orders(unsigned a, unsigned b) {
    if (a != b)
        throw field_error("incompatible cyclotomic fields: order " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_orders(order_, o.order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_orders(order_, o.order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_orders(order_, o.order_);
    coeffs_ = mul(coeffs_, o.coeffs_);
    reduce_();
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero cyclotomic element");
    // Extended Euclid in Q[x] against Phi_n: s*a + t*Phi = gcd = const.
    Poly r0 = cyclotomic_polynomial(order_);
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0 = {}, s1 = {Rational(1)};  // coefficients of the input element
    while (true) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0;
        Poly qs = mul(q, s1);
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        if (r.empty()) {
            // r1 is the gcd, a nonzero constant times a unit (Phi_n irreducible)
            if (r1.size() != 1) throw error("internal: cyclotomic gcd not constant");
            Rational inv_c = r1[0].inverse();
            for (auto& c : s1) c *= inv_c;
            return Cyclotomic(order_, s1);
        }
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::pair<double, double> Cyclotomic::to_complex() const {
    double re = 0, im = 0;
    const double theta = 2.0 * M_PI / static_cast<double>(order_);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        double c = coeffs_[k].to_double();
        re += c * std::cos(theta * static_cast<double>(k));
        im += c * std::sin(theta * static_cast<double>(k));
    }
    return {re, im};
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                a = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) a = -c;
        }
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "z" << order_;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Cyclotomic pow(const Cyclotomic& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    Cyclotomic acc(base.order(), Rational(1));
    Cyclotomic b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace gammalin
