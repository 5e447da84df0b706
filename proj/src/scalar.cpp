#include "gammalin/scalar.hpp"

#include <cctype>

namespace gammalin {

void Scalar::demote_() {
    if (is_rational()) return;
    const Cyclotomic& c = std::get<Cyclotomic>(v_);
    if (c.is_rational()) v_ = c.rational_value();
}

bool Scalar::is_zero() const {
    return is_rational() ? rational().is_zero() : cyclotomic().is_zero();
}

bool Scalar::is_one() const {
    return is_rational() ? rational().is_one() : cyclotomic().is_one();
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-rational());
    return Scalar(-cyclotomic());
}

namespace {
// Promote both operands into a common field; throws field_error when both
// are cyclotomic with distinct orders.
std::pair<Cyclotomic, Cyclotomic> promote(const Scalar& a, const Scalar& b) {
    unsigned na = a.order(), nb = b.order();
    unsigned n = na == 1 ? nb : na;
    if (na != 1 && nb != 1 && na != nb)
        throw field_error("incompatible cyclotomic fields: order " + std::to_string(na) + " vs " +
                          std::to_string(nb));
    Cyclotomic ca = a.is_rational() ? Cyclotomic(n, a.rational()) : a.cyclotomic();
    Cyclotomic cb = b.is_rational() ? Cyclotomic(n, b.rational()) : b.cyclotomic();
    return {ca, cb};
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        v_ = rational() + o.rational();
        return *this;
    }
    auto [a, b] = promote(*this, o);
    v_ = a + b;
    demote_();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        v_ = rational() - o.rational();
        return *this;
    }
    auto [a, b] = promote(*this, o);
    v_ = a - b;
    demote_();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        v_ = rational() * o.rational();
        return *this;
    }
    auto [a, b] = promote(*this, o);
    v_ = a * b;
    demote_();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_rational()) return Scalar(rational().inverse());
    return Scalar(cyclotomic().inverse());
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) return a.rational() == b.rational();
    return a.cyclotomic() == b.cyclotomic();
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    if (a.is_rational()) return a.rational() < b.rational();
    const auto& ca = a.cyclotomic().coeffs();
    const auto& cb = b.cyclotomic().coeffs();
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return false;
}

std::complex<double> Scalar::to_complex() const {
    if (is_rational()) return {rational().to_double(), 0.0};
    auto [re, im] = cyclotomic().to_complex();
    return {re, im};
}

std::string Scalar::str() const {
    return is_rational() ? rational().str() : cyclotomic().str();
}

Scalar pow(const Scalar& base, long e) {
    if (base.is_rational()) return Scalar(pow(base.rational(), e));
    return Scalar(pow(base.cyclotomic(), e));
}

namespace {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw domain_error("scalar parse error at offset " + std::to_string(pos) + ": " + what);
    }

    Scalar parse_factor() {
        skip_ws();
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            Scalar inner = parse_sum();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return maybe_power(inner);
        }
        if (pos < s.size() && s[pos] == 'z') {
            size_t start = ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected root-of-unity order after 'z'");
            unsigned n = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
            return maybe_power(Scalar::zeta(n));
        }
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number or zN");
        std::string digits = s.substr(start, pos - start);
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            return Scalar(Rational::parse(digits + "/" + s.substr(dstart, pos - dstart)));
        }
        return Scalar(Rational::parse(digits));
    }

    Scalar maybe_power(const Scalar& base) {
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected exponent");
            long e = std::stol(s.substr(start, pos - start));
            return pow(base, e);
        }
        return base;
    }

    Scalar parse_term() {
        Scalar acc = parse_factor();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                acc *= parse_factor();
            } else {
                return acc;
            }
        }
    }

    Scalar parse_sum() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        Scalar acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                bool minus = s[pos] == '-';
                ++pos;
                Scalar t = parse_term();
                if (minus)
                    acc -= t;
                else
                    acc += t;
            } else {
                return acc;
            }
        }
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    ScalarParser p(text);
    Scalar r = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace gammalin
