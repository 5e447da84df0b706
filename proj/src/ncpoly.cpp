#include "gammalin/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace gammalin {

std::string Word::str() const {
    if (symbols.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < symbols.size(); ++i) {
        if (i) s += "*";
        s += symbols[i];
    }
    return s;
}

unsigned CommMonomial::degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : exponents) d += e;
    return d;
}

CommMonomial CommMonomial::operator*(const CommMonomial& o) const {
    CommMonomial r = *this;
    for (const auto& [v, e] : o.exponents) {
        r.exponents[v] += e;
    }
    return r;
}

bool operator<(const CommMonomial& a, const CommMonomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // lex descending over variable names in ascending order
    auto ia = a.exponents.begin(), ib = b.exponents.begin();
    while (ia != a.exponents.end() && ib != b.exponents.end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.exponents.end();
}

std::string CommMonomial::str() const {
    if (exponents.empty()) return "1";
    std::string s;
    bool first = true;
    for (const auto& [v, e] : exponents) {
        if (!first) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
        first = false;
    }
    return s;
}

NCPoly NCPoly::term(const Scalar& coeff, const CommMonomial& mono, const Word& w) {
    NCPoly p;
    p.add_term(coeff, mono, w);
    return p;
}

void NCPoly::add_term(const Scalar& coeff, const CommMonomial& mono, const Word& w) {
    if (coeff.is_zero()) return;
    Key key{w, mono};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(c, k.mono, k.word);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(-c, k.mono, k.word);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ca * cb, ka.mono * kb.mono, ka.word * kb.word);
    return r;
}

NCPoly operator*(const Scalar& c, const NCPoly& p) {
    NCPoly r;
    for (const auto& [k, pc] : p.terms_) r.add_term(c * pc, k.mono, k.word);
    return r;
}

namespace {

// Appends term strings with " + " / " - " joiners; pieces may carry a
// leading '-'.
std::string join_signed(const std::vector<std::string>& pieces) {
    std::string out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const std::string& p = pieces[i];
        if (i == 0) {
            out = p;
        } else if (!p.empty() && p[0] == '-') {
            out += " - " + p.substr(1);
        } else {
            out += " + " + p;
        }
    }
    return out;
}

// One "coeff*mono" piece; bare_one renders coefficient 1 with empty
// monomial as "1" (needed when there is no word to carry the term).
std::string coeff_mono_str(const Scalar& coeff, const CommMonomial& mono, bool bare_one) {
    std::string sign;
    Scalar c = coeff;
    if (c.is_rational() && c.rational().sign() < 0) {
        sign = "-";
        c = -c;
    }
    std::string cs;
    if (!c.is_one()) {
        cs = c.str();
        if (!c.is_rational() && !c.cyclotomic().is_rational() &&
            cs.find(' ') != std::string::npos)
            cs = "(" + cs + ")";
    }
    std::string ms = mono.empty() ? "" : mono.str();
    std::string body;
    if (cs.empty() && ms.empty()) {
        body = bare_one ? "1" : "";
    } else if (cs.empty()) {
        body = ms;
    } else if (ms.empty()) {
        body = cs;
    } else {
        body = cs + "*" + ms;
    }
    return sign + body;
}

}  // namespace

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    // group by word, preserving the map's word-major order
    std::vector<std::string> groups;
    auto it = terms_.begin();
    while (it != terms_.end()) {
        const Word& w = it->first.word;
        std::vector<std::pair<CommMonomial, Scalar>> coeffs;
        while (it != terms_.end() && it->first.word == w) {
            coeffs.emplace_back(it->first.mono, it->second);
            ++it;
        }
        std::sort(coeffs.begin(), coeffs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::string> parts;
        for (const auto& [m, c] : coeffs) parts.push_back(coeff_mono_str(c, m, true));
        if (w.empty()) {
            if (parts.size() == 1) {
                groups.push_back(parts[0]);
            } else {
                groups.push_back("(" + join_signed(parts) + ")*1");
            }
            continue;
        }
        if (parts.size() == 1) {
            std::string cm = coeff_mono_str(coeffs[0].second, coeffs[0].first, false);
            if (cm.empty()) {
                groups.push_back(w.str());
            } else if (cm == "-") {
                groups.push_back("-" + w.str());
            } else {
                groups.push_back(cm + "*" + w.str());
            }
        } else {
            groups.push_back("(" + join_signed(parts) + ")*" + w.str());
        }
    }
    return join_signed(groups);
}

NCPoly perm_sum(unsigned n, unsigned k, bool with_multiplicity) {
    if (k > n) throw domain_error("perm_sum: k must lie in [0, n]");
    std::vector<std::string> arrangement;
    arrangement.insert(arrangement.end(), n - k, "X");
    arrangement.insert(arrangement.end(), k, "Y");
    Scalar coeff(1);
    if (with_multiplicity) {
        Rational f(1);
        for (unsigned i = 2; i <= n - k; ++i) f *= Rational(static_cast<long>(i));
        for (unsigned i = 2; i <= k; ++i) f *= Rational(static_cast<long>(i));
        coeff = Scalar(f);
    }
    NCPoly p;
    do {
        p.add_term(coeff, CommMonomial(), Word(arrangement));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return p;
}

NCPoly expand_power(const std::vector<std::pair<std::string, std::string>>& linear_form, unsigned n) {
    if (n < 1) throw domain_error("expand_power: exponent must be positive");
    for (size_t i = 0; i < linear_form.size(); ++i)
        for (size_t j = i + 1; j < linear_form.size(); ++j)
            if (linear_form[i].second == linear_form[j].second)
                throw domain_error("expand_power: duplicate symbol '" + linear_form[i].second + "'");
    NCPoly base;
    for (const auto& [var, sym] : linear_form)
        base.add_term(Scalar(1), CommMonomial::var(var), Word{sym});
    NCPoly acc = base;
    for (unsigned i = 1; i < n; ++i) acc *= base;
    return acc;
}

std::map<CommMonomial, NCPoly> grade(const NCPoly& p) {
    std::map<CommMonomial, NCPoly> groups;
    for (const auto& [key, coeff] : p.terms())
        groups[key.mono].add_term(coeff, CommMonomial(), key.word);
    return groups;
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    Rational r(1);
    for (unsigned i = 1; i <= k; ++i)
        r *= Rational(static_cast<long>(n - k + i), static_cast<long>(i));
    return r;
}

}  // namespace gammalin
