#ifndef GAMMALIN_RELATIONS_HPP
#define GAMMALIN_RELATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gammalin/ncpoly.hpp"

namespace gammalin {

/// Oriented rewrite rule: a nonempty word pattern replaced by a polynomial.
struct RewriteRule {
    Word pattern;
    NCPoly replacement;
};

/// Thrown when a rule does not strictly decrease the term order and the
/// rule set could loop.
struct non_terminating_rule : error {
    using error::error;
};

/// Ordered rewrite rules plus the total symbol order used for the
/// termination check. Every rule must map its pattern to a polynomial all
/// of whose words are strictly smaller in degree-lexicographic order under
/// the declared symbol order.
class RelationSet {
   public:
    /// symbol_order: declaration order; symbols not listed rank after all
    /// listed ones, alphabetically.
    explicit RelationSet(std::vector<std::string> symbol_order = {});

    /// Validates termination and appends; throws non_terminating_rule.
    void add_rule(const Word& pattern, const NCPoly& replacement);

    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<std::string>& symbol_order() const { return symbol_order_; }

    /// Strict degree-lexicographic comparison under the declared order.
    bool word_less(const Word& a, const Word& b) const;

    /// Normal form: no rule pattern occurs as a subword of any stored word.
    /// Idempotent; a ring homomorphism modulo the two-sided ideal of the
    /// rules. strategy 0 rewrites the leftmost match of the first matching
    /// rule; strategy 1 the rightmost match of the last matching rule
    /// (confluence cross-check in tests).
    NCPoly reduce(const NCPoly& p, int strategy = 0) const;

   private:
    int symbol_rank_(const std::string& s) const;

    std::vector<std::string> symbol_order_;
    std::vector<RewriteRule> rules_;
};

}  // namespace gammalin

#endif
