#ifndef GAMMALIN_NCPOLY_HPP
#define GAMMALIN_NCPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gammalin/scalar.hpp"

namespace gammalin {

/// Word in noncommuting symbols; the empty word is the multiplicative unit.
struct Word {
    std::vector<std::string> symbols;

    Word() = default;
    Word(std::initializer_list<std::string> s) : symbols(s) {}
    explicit Word(std::vector<std::string> s) : symbols(std::move(s)) {}

    bool empty() const { return symbols.empty(); }
    size_t length() const { return symbols.size(); }

    Word operator*(const Word& o) const {
        Word r = *this;
        r.symbols.insert(r.symbols.end(), o.symbols.begin(), o.symbols.end());
        return r;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.symbols == b.symbols; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    /// Degree-lexicographic order (by name); canonical storage order.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.symbols < b.symbols;
    }

    std::string str() const;  // "X*Y*X", empty word renders as "1"
};

/// Monomial in commuting variables; zero exponents are never stored.
struct CommMonomial {
    std::map<std::string, unsigned> exponents;

    CommMonomial() = default;

    static CommMonomial var(const std::string& name, unsigned e = 1) {
        CommMonomial m;
        if (e > 0) m.exponents[name] = e;
        return m;
    }

    unsigned degree() const;
    bool empty() const { return exponents.empty(); }

    CommMonomial operator*(const CommMonomial& o) const;

    friend bool operator==(const CommMonomial& a, const CommMonomial& b) {
        return a.exponents == b.exponents;
    }
    friend bool operator!=(const CommMonomial& a, const CommMonomial& b) { return !(a == b); }

    /// Render order: total degree descending, then lex descending on the
    /// exponent vector, so x^2 + x*y + y^2 prints in that order.
    friend bool operator<(const CommMonomial& a, const CommMonomial& b);

    std::string str() const;  // "x^2*y", empty monomial renders as "1"
};

/// Noncommutative polynomial: finite sum of scalar * monomial * word.
/// Terms with zero coefficient are never stored.
class NCPoly {
   public:
    struct Key {
        Word word;
        CommMonomial mono;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.word != b.word) return a.word < b.word;
            return a.mono < b.mono;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.word == b.word && a.mono == b.mono;
        }
    };
    using TermMap = std::map<Key, Scalar>;

    NCPoly() = default;

    static NCPoly zero() { return {}; }
    static NCPoly one() { return term(Scalar(1), CommMonomial(), Word()); }
    static NCPoly symbol(const std::string& s) { return term(Scalar(1), CommMonomial(), Word{s}); }
    static NCPoly word(const Word& w) { return term(Scalar(1), CommMonomial(), w); }
    static NCPoly scalar(const Scalar& c) { return term(c, CommMonomial(), Word()); }
    static NCPoly variable(const std::string& v) {
        return term(Scalar(1), CommMonomial::var(v), Word());
    }
    static NCPoly term(const Scalar& coeff, const CommMonomial& mono, const Word& w);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Scalar& coeff, const CommMonomial& mono, const Word& w);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
    friend NCPoly operator*(const Scalar& c, const NCPoly& p);

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Canonical rendering, grouped by word:
    /// "x^2*X*X + x*y*X*Y + x*y*Y*X", "(x^2 + y^2)*1".
    std::string str() const;

   private:
    TermMap terms_;
};

/// Sum over all distinct arrangements of n-k copies of X and k copies of Y,
/// coefficient 1 each; C(n,k) terms. with_multiplicity scales by (n-k)!*k!.
NCPoly perm_sum(unsigned n, unsigned k, bool with_multiplicity = false);

/// Full noncommutative expansion of (sum_i var_i * sym_i)^n.
NCPoly expand_power(const std::vector<std::pair<std::string, std::string>>& linear_form, unsigned n);

/// Partition of terms by commutative monomial; reassembling reproduces p.
std::map<CommMonomial, NCPoly> grade(const NCPoly& p);

/// C(n,k) as exact arbitrary-precision value.
Rational binomial(unsigned n, unsigned k);

}  // namespace gammalin

#endif
