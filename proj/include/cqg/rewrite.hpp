#pragma once

#include <optional>
#include <set>

#include "cqg/ncpoly.hpp"

namespace cqg {

struct NonMonomialLeadingCoefficient : std::runtime_error {
    explicit NonMonomialLeadingCoefficient(const std::string& what)
        : std::runtime_error(what) {}
};
struct NonTermination : std::runtime_error {
    explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

/// Oriented relation: leading word rewrites to the (strictly smaller) rest.
struct Rule {
    Word lhs;
    NCPoly rhs;
};

/// A critical pair the probe could not join, together with the two distinct
/// normal forms reached.  The difference nf_left - nf_right is a completion
/// candidate.
struct Overlap {
    std::size_t rule_left, rule_right;
    Word word;
    NCPoly nf_left, nf_right;
};

class RewriteSystem {
public:
    RewriteSystem() = default;

    /// Orient each relation with its deglex-largest word as the left side.
    /// Throws NonMonomialLeadingCoefficient when a leading coefficient is not
    /// invertible.
    RewriteSystem(const std::vector<NCPoly>& relations, long step_budget = 100000);

    const std::vector<Rule>& rules() const { return rules_; }
    long step_budget() const { return step_budget_; }
    void set_step_budget(long budget) { step_budget_ = budget; }

    /// Exhaustive reduction, deterministic (largest pending word first,
    /// leftmost match, first matching rule).
    NCPoly normal_form(const NCPoly& p) const;

    /// Independent strategy (smallest pending word first, rightmost match,
    /// last matching rule); used as a cross-check oracle.
    NCPoly normal_form_alt(const NCPoly& p) const;

    /// Reduce both legs of a tensor-square element independently.
    NCPoly2 normal_form2(const NCPoly2& p) const;
    NCPoly3 normal_form3(const NCPoly3& p) const;

    /// Diamond-lemma check: resolve every overlap of two leading words of
    /// combined length <= max_len both ways (including pairs of rules with
    /// the same left side); returns the non-joinable pairs.
    std::vector<Overlap> confluence_probe(int max_len) const;

private:
    NCPoly reduce(const NCPoly& p, bool alt) const;
    const NCPoly& word_nf(const Word& w, bool alt, long& steps) const;
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w,
                                                                  bool alt) const;

    // memoized word reductions; rules are fixed after construction
    mutable std::map<Word, NCPoly> cache_[2];
    mutable std::set<Word> in_progress_[2];

    std::vector<Rule> rules_;
    std::map<Generator, std::vector<std::size_t>> index_;  // by first generator of lhs
    long step_budget_ = 100000;
};

/// Close the relation set under unresolved overlaps: probe, append each
/// non-joinable difference as a new relation, rebuild, repeat until the probe
/// comes back clean.  Throws NonTermination when no progress is made or the
/// round limit is hit.
RewriteSystem complete_system(std::vector<NCPoly> relations, int probe_len,
                              long step_budget = 100000, int max_rounds = 25);

}  // namespace cqg
