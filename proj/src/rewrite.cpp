#include "cqg/rewrite.hpp"

#include <algorithm>
#include <set>

namespace cqg {

namespace {

bool matches_at(const Word& w, const Word& pattern, std::size_t pos) {
    if (pos + pattern.size() > w.size()) return false;
    return std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
}

}  // namespace

RewriteSystem::RewriteSystem(const std::vector<NCPoly>& relations, long step_budget)
    : step_budget_(step_budget) {
    Palette dump = Palette::symbolic({"#0", "#1", "#2"});  // for error messages only
    for (const NCPoly& rel : relations) {
        if (rel.is_zero()) continue;
        const Word& lead = rel.leading_word();
        const Scalar& coeff = rel.leading_coeff();
        if (!coeff.is_monomial())
            throw NonMonomialLeadingCoefficient("relation with non-invertible leading term: " +
                                                rel.str(dump));
        if (lead.empty())
            throw std::invalid_argument("relation with constant leading term: " + rel.str(dump));
        NCPoly rest = rel - NCPoly::term(coeff, lead);
        rules_.push_back({lead, rest.scaled(-coeff.inverse())});
    }
    for (std::size_t r = 0; r < rules_.size(); ++r)
        index_[rules_[r].lhs.front()].push_back(r);
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_redex(
    const Word& w, bool alt) const {
    // rules are indexed by the first generator of their left side
    if (!alt) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            auto it = index_.find(w[pos]);
            if (it == index_.end()) continue;
            for (std::size_t r : it->second)
                if (matches_at(w, rules_[r].lhs, pos)) return {{pos, r}};
        }
        return std::nullopt;
    }
    for (std::size_t pos = w.size(); pos-- > 0;) {
        auto it = index_.find(w[pos]);
        if (it == index_.end()) continue;
        for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
            if (matches_at(w, rules_[*rit].lhs, pos)) return {{pos, *rit}};
    }
    return std::nullopt;
}

const NCPoly& RewriteSystem::word_nf(const Word& w, bool alt, long& steps) const {
    auto& cache = cache_[alt];
    auto hit = cache.find(w);
    if (hit != cache.end()) return hit->second;
    if (!in_progress_[alt].insert(w).second) {
        Palette dump = Palette::symbolic({"#0", "#1", "#2"});
        throw NonTermination("rewriting cycle at word " + word_str(w, dump));
    }
    if (++steps > step_budget_) {
        Palette dump = Palette::symbolic({"#0", "#1", "#2"});
        throw NonTermination("step budget " + std::to_string(step_budget_) +
                             " exceeded while reducing; last word " + word_str(w, dump));
    }

    NCPoly result;
    auto redex = find_redex(w, alt);
    if (!redex) {
        result = NCPoly::term(Scalar::one(), w);
    } else {
        auto [pos, r] = *redex;
        const Rule& rule = rules_[r];
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + rule.lhs.size(), w.end());
        for (const auto& [mid, mc] : rule.rhs.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            const NCPoly& sub = word_nf(nw, alt, steps);
            for (const auto& [sw, sc] : sub.terms()) result += NCPoly::term(mc * sc, sw);
        }
    }
    in_progress_[alt].erase(w);
    return cache.emplace(w, std::move(result)).first->second;
}

NCPoly RewriteSystem::reduce(const NCPoly& p, bool alt) const {
    long steps = 0;
    NCPoly result;
    try {
        for (const auto& [w, c] : p.terms()) {
            const NCPoly& nf = word_nf(w, alt, steps);
            for (const auto& [sw, sc] : nf.terms()) result += NCPoly::term(c * sc, sw);
        }
    } catch (...) {
        in_progress_[alt].clear();
        throw;
    }
    return result;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const { return reduce(p, false); }
NCPoly RewriteSystem::normal_form_alt(const NCPoly& p) const { return reduce(p, true); }

NCPoly2 RewriteSystem::normal_form2(const NCPoly2& p) const {
    NCPoly2 r;
    for (const auto& [k, c] : p.terms()) {
        NCPoly left = normal_form(NCPoly::term(Scalar::one(), k.first));
        NCPoly right = normal_form(NCPoly::term(Scalar::one(), k.second));
        for (const auto& [wl, cl] : left.terms())
            for (const auto& [wr, cr] : right.terms())
                r += NCPoly2::term(c * cl * cr, wl, wr);
    }
    return r;
}

NCPoly3 RewriteSystem::normal_form3(const NCPoly3& p) const {
    NCPoly3 r;
    for (const auto& [k, c] : p.terms()) {
        NCPoly legs[3];
        for (int i = 0; i < 3; ++i) legs[i] = normal_form(NCPoly::term(Scalar::one(), k[i]));
        for (const auto& [w0, c0] : legs[0].terms())
            for (const auto& [w1, c1] : legs[1].terms())
                for (const auto& [w2, c2] : legs[2].terms())
                    r += NCPoly3::term(c * c0 * c1 * c2, w0, w1, w2);
    }
    return r;
}

std::vector<Overlap> RewriteSystem::confluence_probe(int max_len) const {
    std::vector<Overlap> bad;
    auto record = [&](std::size_t i, std::size_t j, const Word& w, const NCPoly& pi,
                      const NCPoly& pj) {
        NCPoly ni = normal_form(pi);
        NCPoly nj = normal_form(pj);
        if (!(ni == nj)) bad.push_back({i, j, w, ni, nj});
    };

    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word& u = rules_[i].lhs;
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            const Word& v = rules_[j].lhs;
            // two rules sharing a left side form a critical pair at that word
            if (i < j && u == v && static_cast<int>(u.size()) <= max_len)
                record(i, j, u, rules_[i].rhs, rules_[j].rhs);
            // suffix of u overlaps prefix of v
            for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
                if (!std::equal(v.begin(), v.begin() + k, u.end() - k)) continue;
                Word w = u;
                w.insert(w.end(), v.begin() + k, v.end());
                if (static_cast<int>(w.size()) > max_len) continue;
                Word suffix(v.begin() + k, v.end());
                Word prefix(u.begin(), u.end() - k);
                NCPoly via_i = rules_[i].rhs * NCPoly::term(Scalar::one(), suffix);
                NCPoly via_j = NCPoly::term(Scalar::one(), prefix) * rules_[j].rhs;
                record(i, j, w, via_i, via_j);
            }
            // v occurs strictly inside u
            if (i != j && v.size() < u.size()) {
                for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
                    if (!matches_at(u, v, pos)) continue;
                    if (static_cast<int>(u.size()) > max_len) continue;
                    Word prefix(u.begin(), u.begin() + pos);
                    Word suffix(u.begin() + pos + v.size(), u.end());
                    NCPoly via_j = NCPoly::term(Scalar::one(), prefix) * rules_[j].rhs *
                                   NCPoly::term(Scalar::one(), suffix);
                    record(i, j, u, rules_[i].rhs, via_j);
                }
            }
        }
    }
    return bad;
}

namespace {

bool contains_subword(const Word& w, const Word& sub) {
    if (sub.size() > w.size()) return false;
    for (std::size_t pos = 0; pos + sub.size() <= w.size(); ++pos)
        if (std::equal(sub.begin(), sub.end(), w.begin() + pos)) return true;
    return false;
}

// In a confluent system a rule whose left side contains another rule's left
// side (as subword, or equal with a smaller index) is implied by the rest.
RewriteSystem prune_confluent(const RewriteSystem& rs, int probe_len, long step_budget) {
    const std::vector<Rule>& rules = rs.rules();
    std::vector<NCPoly> kept;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < rules.size() && !redundant; ++j) {
            if (i == j) continue;
            if (rules[j].lhs == rules[i].lhs)
                redundant = j < i;
            else
                redundant = contains_subword(rules[i].lhs, rules[j].lhs);
        }
        if (!redundant)
            kept.push_back(NCPoly::term(Scalar::one(), rules[i].lhs) - rules[i].rhs);
    }
    if (kept.size() == rules.size()) return rs;
    RewriteSystem pruned(kept, step_budget);
    if (pruned.confluence_probe(probe_len).empty()) return pruned;
    return rs;
}

}  // namespace

RewriteSystem complete_system(std::vector<NCPoly> relations, int probe_len,
                              long step_budget, int max_rounds) {
    std::set<NCPoly> seen(relations.begin(), relations.end());
    for (int round = 0; round < max_rounds; ++round) {
        RewriteSystem rs(relations, step_budget);
        std::vector<Overlap> bad = rs.confluence_probe(probe_len);
        if (bad.empty()) return prune_confluent(rs, probe_len, step_budget);
        bool added = false;
        std::size_t deferred = 0;
        for (const Overlap& o : bad) {
            // both sides are already normal forms, so the difference is too
            NCPoly diff = (o.nf_left - o.nf_right).content_reduced();
            if (diff.is_zero()) continue;
            if (!diff.leading_coeff().is_monomial()) {
                // not orientable yet; rules added this round may fix it
                ++deferred;
                continue;
            }
            diff = diff.monic();
            if (seen.insert(diff).second) {
                relations.push_back(diff);
                added = true;
            }
        }
        if (!added) {
            if (deferred)
                throw NonMonomialLeadingCoefficient(
                    "completion stuck on " + std::to_string(deferred) +
                    " overlaps with non-invertible leading coefficients");
            throw NonTermination("completion stalled with " + std::to_string(bad.size()) +
                                 " unresolved overlaps");
        }
    }
    throw NonTermination("completion did not converge after " +
                         std::to_string(max_rounds) + " rounds");
}

}  // namespace cqg
