#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gammalin/relations.hpp"

using namespace gammalin;

namespace {

// Gaussian binomial [n k]_q evaluated at q = zeta(n), via the product
// formula with exact cyclotomic arithmetic. Independent of the rewrite
// engine.
Scalar gaussian_binomial(unsigned n, unsigned k, const Scalar& q) {
    Scalar num(1), den(1);
    auto q_int = [&](unsigned m) {
        Scalar s(0);
        for (unsigned j = 0; j < m; ++j) s += pow(q, j);
        return s;
    };
    for (unsigned j = 1; j <= k; ++j) {
        num *= q_int(n - k + j);
        den *= q_int(j);
    }
    return num / den;
}

// Brute-force oracle: sum of q-weights over all C(n,k) arrangements,
// where the weight of a word is q^(number of YX inversions).
Scalar inversion_weight_sum(unsigned n, unsigned k, const Scalar& q) {
    std::vector<int> w(n, 0);
    std::fill(w.begin() + (n - k), w.end(), 1);
    Scalar total(0);
    do {
        unsigned inversions = 0;
        for (unsigned i = 0; i < n; ++i)
            if (w[i] == 1)
                for (unsigned j = i + 1; j < n; ++j)
                    if (w[j] == 0) ++inversions;
        total += pow(q, inversions);
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
}

}  // namespace

TEST_CASE("perm_sum lists distinct arrangements") {
    NCPoly p21 = perm_sum(2, 1);
    NCPoly expected = NCPoly::word(Word{"X", "Y"}) + NCPoly::word(Word{"Y", "X"});
    CHECK(p21 == expected);

    CHECK(perm_sum(3, 1).str() == "X*X*Y + X*Y*X + Y*X*X");
    CHECK(perm_sum(3, 2).str() == "X*Y*Y + Y*X*Y + Y*Y*X");
    CHECK(perm_sum(5, 0) == NCPoly::word(Word({std::vector<std::string>(5, "X")})));
    CHECK_THROWS_AS(perm_sum(3, 4), domain_error);
}

TEST_CASE("perm_sum term counts are binomial") {
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(Rational(static_cast<long>(perm_sum(n, k).term_count())) == binomial(n, k));
}

TEST_CASE("perm_sum multiplicity flag scales by (n-k)! k!") {
    NCPoly plain = perm_sum(4, 2);
    NCPoly scaled = perm_sum(4, 2, true);
    CHECK(scaled == Scalar(Rational(4)) * plain);  // 2! * 2!
}

TEST_CASE("perm_sum X/Y swap symmetry") {
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            NCPoly swapped;
            NCPoly original = perm_sum(n, k);
            for (const auto& [key, c] : original.terms()) {
                std::vector<std::string> syms;
                for (const auto& s : key.word.symbols) syms.push_back(s == "X" ? "Y" : "X");
                swapped.add_term(c, key.mono, Word(syms));
            }
            CHECK(swapped == perm_sum(n, n - k));
        }
}

TEST_CASE("expand_power structure") {
    NCPoly sq = expand_power({{"x", "X"}, {"y", "Y"}}, 2);
    NCPoly expected;
    CommMonomial x2 = CommMonomial::var("x", 2);
    CommMonomial y2 = CommMonomial::var("y", 2);
    CommMonomial xy = CommMonomial::var("x") * CommMonomial::var("y");
    expected.add_term(Scalar(1), x2, Word{"X", "X"});
    expected.add_term(Scalar(1), xy, Word{"X", "Y"});
    expected.add_term(Scalar(1), xy, Word{"Y", "X"});
    expected.add_term(Scalar(1), y2, Word{"Y", "Y"});
    CHECK(sq == expected);
    CHECK(sq.str() == "x^2*X*X + x*y*X*Y + x*y*Y*X + y^2*Y*Y");

    CHECK(expand_power({{"x", "X"}}, 5).str() == "x^5*X*X*X*X*X");
    CHECK_THROWS_AS(expand_power({{"x", "X"}, {"y", "X"}}, 2), domain_error);
}

TEST_CASE("expand_power at power 3 groups into perm sums") {
    NCPoly cube = expand_power({{"x", "X"}, {"y", "Y"}}, 3);
    CHECK(cube.term_count() == 8);
    auto groups = grade(cube);
    CHECK(groups.size() == 4);
    CommMonomial x2y = CommMonomial::var("x", 2) * CommMonomial::var("y");
    CommMonomial xy2 = CommMonomial::var("x") * CommMonomial::var("y", 2);
    CHECK(groups.at(x2y) == perm_sum(3, 1));
    CHECK(groups.at(xy2) == perm_sum(3, 2));
}

TEST_CASE("two-symbol expansion has 2^n words") {
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(expand_power({{"x", "X"}, {"y", "Y"}}, n).term_count() == (1u << n));
}

TEST_CASE("binomial specialization: symbols commuted away") {
    for (unsigned n = 1; n <= 12; ++n) {
        NCPoly p = expand_power({{"x", "X"}, {"y", "Y"}}, n);
        // send every symbol to the empty word
        std::map<CommMonomial, Scalar> collapsed;
        for (const auto& [key, c] : p.terms()) {
            auto [it, inserted] = collapsed.emplace(key.mono, c);
            if (!inserted) it->second += c;
        }
        for (unsigned k = 0; k <= n; ++k) {
            CommMonomial m = CommMonomial::var("x", n - k) * CommMonomial::var("y", k);
            CHECK(collapsed.at(m) == Scalar(binomial(n, k)));
        }
    }
}

TEST_CASE("grade partitions and reassembles") {
    NCPoly cube = expand_power({{"x", "X"}, {"y", "Y"}}, 3);
    auto groups = grade(cube);
    std::vector<size_t> counts;
    for (const auto& [mono, part] : groups) counts.push_back(part.term_count());
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<size_t>{1, 1, 3, 3});

    NCPoly reassembled;
    for (const auto& [mono, part] : groups)
        reassembled += NCPoly::term(Scalar(1), mono, Word()) * part;
    CHECK(reassembled == cube);

    CHECK(grade(NCPoly::zero()).empty());
    NCPoly single = NCPoly::term(Scalar(1), CommMonomial::var("x"), Word{"X"}) +
                    NCPoly::term(Scalar(1), CommMonomial::var("x"), Word{"Y"});
    auto g = grade(single);
    CHECK(g.size() == 1);
    CHECK(g.begin()->second == NCPoly::symbol("X") + NCPoly::symbol("Y"));
}

TEST_CASE("reduce with anticommutation") {
    RelationSet rs({"Y", "X"});  // makes XY -> -YX decreasing: X ranks above Y
    rs.add_rule(Word{"X", "Y"}, Scalar(-1) * NCPoly::word(Word{"Y", "X"}));
    NCPoly p = NCPoly::word(Word{"X", "Y"}) + NCPoly::word(Word{"Y", "X"});
    CHECK(rs.reduce(p).is_zero());
}

TEST_CASE("reduce involution to identity") {
    RelationSet rs({"X"});
    rs.add_rule(Word{"X", "X"}, NCPoly::one());
    CHECK(rs.reduce(NCPoly::word(Word{"X", "X"})) == NCPoly::one());
}

TEST_CASE("reduce recovers the Pythagorean identity") {
    RelationSet rs({"Y", "X"});
    rs.add_rule(Word{"X", "X"}, NCPoly::one());
    rs.add_rule(Word{"Y", "Y"}, NCPoly::one());
    rs.add_rule(Word{"X", "Y"}, Scalar(-1) * NCPoly::word(Word{"Y", "X"}));
    NCPoly sq = expand_power({{"x", "X"}, {"y", "Y"}}, 2);
    NCPoly reduced = rs.reduce(sq);
    NCPoly expected = NCPoly::term(Scalar(1), CommMonomial::var("x", 2), Word()) +
                      NCPoly::term(Scalar(1), CommMonomial::var("y", 2), Word());
    CHECK(reduced == expected);
    CHECK(reduced.str() == "(x^2 + y^2)*1");
}

TEST_CASE("omega-commutation kills perm_sum(3,1)") {
    Scalar omega = Scalar::zeta(3);
    RelationSet rs({"X", "Y"});
    rs.add_rule(Word{"Y", "X"}, omega * NCPoly::word(Word{"X", "Y"}));
    rs.add_rule(Word{"X", "X", "X"}, NCPoly::one());
    rs.add_rule(Word{"Y", "Y", "Y"}, NCPoly::one());
    CHECK(rs.reduce(perm_sum(3, 1)).is_zero());
}

TEST_CASE("q-binomial vanishing at primitive roots") {
    for (unsigned n = 2; n <= 6; ++n) {
        Scalar omega = Scalar::zeta(n);
        RelationSet rs({"X", "Y"});
        rs.add_rule(Word{"Y", "X"}, omega * NCPoly::word(Word{"X", "Y"}));
        for (unsigned k = 1; k < n; ++k) {
            // oracle 1: product-formula Gaussian binomial
            Scalar qbin = gaussian_binomial(n, k, omega);
            // oracle 2: brute-force inversion weights
            CHECK(inversion_weight_sum(n, k, omega) == qbin);
            CHECK(qbin.is_zero());
            // engine: reduction collects everything onto X^(n-k) Y^k
            NCPoly reduced = rs.reduce(perm_sum(n, k));
            CHECK(reduced.is_zero());
        }
    }
}

TEST_CASE("reduce is idempotent and strategy-independent") {
    Scalar omega = Scalar::zeta(4);
    RelationSet rs({"X", "Y"});
    rs.add_rule(Word{"Y", "X"}, omega * NCPoly::word(Word{"X", "Y"}));
    rs.add_rule(Word{"X", "X", "X", "X"}, NCPoly::one());
    rs.add_rule(Word{"Y", "Y", "Y", "Y"}, NCPoly::one());
    std::vector<NCPoly> inputs = {perm_sum(4, 2), expand_power({{"x", "X"}, {"y", "Y"}}, 4),
                                  NCPoly::word(Word{"Y", "Y", "X", "X", "Y", "X"})};
    for (const auto& p : inputs) {
        NCPoly a = rs.reduce(p, 0);
        NCPoly b = rs.reduce(p, 1);
        CHECK(a == b);
        CHECK(rs.reduce(a, 0) == a);
    }
}

TEST_CASE("non-terminating rules are rejected at construction") {
    RelationSet rs({"X", "Y"});
    CHECK_THROWS_AS(rs.add_rule(Word{"X"}, NCPoly::word(Word{"X"})), non_terminating_rule);
    CHECK_THROWS_AS(rs.add_rule(Word{"X", "Y"}, NCPoly::word(Word{"Y", "X"})),
                    non_terminating_rule);
    CHECK_THROWS_AS(rs.add_rule(Word{"X"}, NCPoly::word(Word{"X", "X"})), non_terminating_rule);
    CHECK_THROWS_AS(rs.add_rule(Word(), NCPoly::one()), non_terminating_rule);
    // the reversed orientation is fine
    rs.add_rule(Word{"Y", "X"}, NCPoly::word(Word{"X", "Y"}));
}
