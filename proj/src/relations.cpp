#include "gammalin/relations.hpp"

#include <algorithm>

namespace gammalin {

RelationSet::RelationSet(std::vector<std::string> symbol_order) : symbol_order_(std::move(symbol_order)) {}

int RelationSet::symbol_rank_(const std::string& s) const {
    for (size_t i = 0; i < symbol_order_.size(); ++i)
        if (symbol_order_[i] == s) return static_cast<int>(i);
    return static_cast<int>(symbol_order_.size());
}

bool RelationSet::word_less(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    for (size_t i = 0; i < a.length(); ++i) {
        int ra = symbol_rank_(a.symbols[i]);
        int rb = symbol_rank_(b.symbols[i]);
        if (ra != rb) return ra < rb;
        if (a.symbols[i] != b.symbols[i]) return a.symbols[i] < b.symbols[i];
    }
    return false;
}

void RelationSet::add_rule(const Word& pattern, const NCPoly& replacement) {
    if (pattern.empty()) throw non_terminating_rule("rewrite pattern must be a nonempty word");
    for (const auto& [key, coeff] : replacement.terms()) {
        if (!word_less(key.word, pattern))
            throw non_terminating_rule("rule does not decrease the term order: " + pattern.str() +
                                       " -> " + replacement.str() + " (word " + key.word.str() + ")");
    }
    rules_.push_back({pattern, replacement});
}

namespace {

// position of the first (or last) occurrence of `pat` as a subword
std::optional<size_t> find_subword(const Word& w, const Word& pat, bool from_right) {
    if (pat.length() > w.length()) return std::nullopt;
    size_t last = w.length() - pat.length();
    if (!from_right) {
        for (size_t i = 0; i <= last; ++i)
            if (std::equal(pat.symbols.begin(), pat.symbols.end(), w.symbols.begin() + static_cast<long>(i)))
                return i;
    } else {
        for (size_t i = last + 1; i-- > 0;)
            if (std::equal(pat.symbols.begin(), pat.symbols.end(), w.symbols.begin() + static_cast<long>(i)))
                return i;
    }
    return std::nullopt;
}

}  // namespace

NCPoly RelationSet::reduce(const NCPoly& p, int strategy) const {
    NCPoly pending = p;
    NCPoly done;
    while (!pending.is_zero()) {
        // take one term out of pending
        auto it = pending.terms().begin();
        const Word w = it->first.word;
        const CommMonomial mono = it->first.mono;
        const Scalar coeff = it->second;
        pending -= NCPoly::term(coeff, mono, w);

        std::optional<size_t> at;
        const RewriteRule* hit = nullptr;
        if (strategy == 0) {
            // leftmost match of the first matching rule
            size_t best = w.length() + 1;
            for (const auto& rule : rules_) {
                auto pos = find_subword(w, rule.pattern, false);
                if (pos && *pos < best) {
                    best = *pos;
                    hit = &rule;
                    at = pos;
                }
            }
        } else {
            // rightmost match of the last matching rule
            for (auto rit = rules_.rbegin(); rit != rules_.rend(); ++rit) {
                auto pos = find_subword(w, rit->pattern, true);
                if (pos && (!at || *pos > *at)) {
                    at = pos;
                    hit = &*rit;
                }
            }
        }

        if (!hit) {
            done.add_term(coeff, mono, w);
            continue;
        }

        Word prefix(std::vector<std::string>(w.symbols.begin(), w.symbols.begin() + static_cast<long>(*at)));
        Word suffix(std::vector<std::string>(
            w.symbols.begin() + static_cast<long>(*at + hit->pattern.length()), w.symbols.end()));
        for (const auto& [rk, rc] : hit->replacement.terms()) {
            pending.add_term(coeff * rc, mono * rk.mono, prefix * rk.word * suffix);
        }
    }
    return done;
}

}  // namespace gammalin
