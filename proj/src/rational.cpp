#include "gammalin/rational.hpp"

#include <ostream>

namespace gammalin {

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw domain_error("cannot parse rational: '" + text + "'");
    if (q.get_den() == 0) throw division_by_zero("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace gammalin
