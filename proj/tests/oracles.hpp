#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the engine code they are compared against.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "indkernel/finite.hpp"
#include "indkernel/inddef.hpp"
#include "indkernel/proof.hpp"
#include "indkernel/square.hpp"
#include "indkernel/wtype.hpp"

namespace oracle {

using namespace indkernel;

inline bool closed_under(const InductiveDefinition& phi, const std::vector<bool>& set) {
    for (const auto& r : phi.rules()) {
        bool fires = true;
        for (auto x : r.premises.indices()) fires = fires && set[x];
        if (fires && !set[r.conclusion]) return false;
    }
    return true;
}

/// Intersection of every closed superset of `seed`, found by enumerating all
/// 2^|S| subsets. Also returns how many closed supersets there were.
inline Subset least_closed_superset(const InductiveDefinition& phi, const Subset& seed,
                                    std::size_t* closed_count = nullptr) {
    const auto n = phi.carrier().size();
    std::vector<bool> meet(n, true);
    std::size_t found = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<bool> set(n);
        bool contains_seed = true;
        for (std::size_t i = 0; i < n; ++i) {
            set[i] = (mask >> i) & 1;
            if (seed.contains(i) && !set[i]) contains_seed = false;
        }
        if (!contains_seed || !closed_under(phi, set)) continue;
        ++found;
        for (std::size_t i = 0; i < n; ++i) meet[i] = meet[i] && set[i];
    }
    if (closed_count) *closed_count = found;
    Subset out(phi.carrier());
    for (std::size_t i = 0; i < n; ++i) {
        if (meet[i]) out.insert(i);
    }
    return out;
}

/// conc computed by a fold over the tree.
inline std::size_t fold_conc(const ProofSignature& ps, const WTree& w) {
    return fold<std::size_t>(w, [&](std::size_t label, std::span<const std::size_t>) {
        return ps.is_rule_label(label) ? ps.definition().rules()[ps.rule_of(label)].conclusion
                                       : ps.element_of(label);
    });
}

/// ass computed by a fold over the tree.
inline Subset fold_ass(const ProofSignature& ps, const WTree& w) {
    return fold<Subset>(w, [&](std::size_t label, std::span<const Subset> kids) {
        Subset out(ps.carrier());
        if (!ps.is_rule_label(label)) {
            out.insert(ps.element_of(label));
            return out;
        }
        for (const auto& k : kids) out |= k;
        return out;
    });
}

/// Every subtree, collected by plain recursion (children after parent).
inline void collect_subtrees(const WTree& w, std::vector<WTree>& out) {
    out.push_back(w);
    for (const auto& c : w.children()) collect_subtrees(c, out);
}

/// Node-local well-formedness decided from the rule's premise list directly.
inline bool node_ok(const ProofSignature& ps, const WTree& w) {
    if (w.label() >= ps.label_count()) return false;
    if (!ps.is_rule_label(w.label())) return w.children().empty();
    const auto& rule = ps.definition().rules()[ps.rule_of(w.label())];
    auto premises = rule.premises.indices();
    if (premises.size() != w.children().size()) return false;
    for (std::size_t i = 0; i < premises.size(); ++i) {
        if (fold_conc(ps, w.children()[i]) != premises[i]) return false;
    }
    return true;
}

inline bool all_subtrees_ok(const ProofSignature& ps, const WTree& w) {
    std::vector<WTree> all;
    collect_subtrees(w, all);
    for (const auto& t : all) {
        if (!node_ok(ps, t)) return false;
    }
    return true;
}

/// Every proof of depth <= max_depth, grouped by conclusion. Exponential;
/// callers keep the definition tiny.
inline std::vector<WTree> all_proofs(const ProofSignature& ps, std::size_t max_depth, std::size_t cap = 20000) {
    const auto& phi = ps.definition();
    const auto n = phi.carrier().size();
    // by_conc[x] = proofs of x found so far (all depths <= current)
    std::vector<std::vector<WTree>> by_conc(n);
    if (max_depth == 0) return {};
    for (std::size_t x = 0; x < n; ++x) by_conc[x].push_back(ps.assumption(x));
    for (std::size_t depth = 1; depth <= max_depth; ++depth) {
        std::vector<std::vector<WTree>> next = by_conc;
        for (std::size_t r = 0; r < phi.rules().size(); ++r) {
            auto premises = phi.rules()[r].premises.indices();
            // proofs of depth exactly `depth` use children of depth <= depth-1;
            // at depth 1 only nullary rules apply
            if (depth == 1 && !premises.empty()) continue;
            std::vector<WTree> picked;
            std::function<void(std::size_t)> choose = [&](std::size_t i) {
                if (next[phi.rules()[r].conclusion].size() > cap) return;
                if (i == premises.size()) {
                    auto t = ps.rule_app(r, picked);
                    if (t.depth() == depth) next[phi.rules()[r].conclusion].push_back(t);
                    return;
                }
                for (const auto& c : by_conc[premises[i]]) {
                    picked.push_back(c);
                    choose(i + 1);
                    picked.pop_back();
                }
            };
            if (depth > 1 || premises.empty()) choose(0);
        }
        by_conc = std::move(next);
    }
    std::vector<WTree> out;
    for (auto& v : by_conc) out.insert(out.end(), v.begin(), v.end());
    return out;
}

/// Fiber-size vectors of every surjection {e0..e_{k-1}} ->> target with
/// k <= max_domain, found by enumerating all maps and quotienting.
inline std::set<std::vector<std::size_t>> surjection_classes(std::size_t target_size, std::size_t max_domain) {
    std::set<std::vector<std::size_t>> out;
    for (std::size_t k = 0; k <= max_domain; ++k) {
        std::vector<std::size_t> table(k, 0);
        if (target_size == 0 && k > 0) continue;
        while (true) {
            std::vector<std::size_t> sizes(target_size, 0);
            for (auto y : table) ++sizes[y];
            bool onto = true;
            for (auto s : sizes) onto = onto && s > 0;
            if (onto) out.insert(sizes);
            std::size_t i = 0;
            while (i < k && ++table[i] == target_size) table[i++] = 0;
            if (i == k) break;
        }
    }
    return out;
}

/// Exhaustive search for c over a and h: D_c -> E with e∘h = q restricted
/// to D_c. `e` maps E onto the fiber carrier of f over a.
inline bool lift_exists(const Square& sq, std::size_t a, const FinMap& e) {
    for (std::size_t c = 0; c < sq.c().size(); ++c) {
        if (sq.p()(c) != a) continue;
        std::vector<std::size_t> dc;
        for (std::size_t d = 0; d < sq.d().size(); ++d) {
            if (sq.g()(d) == c) dc.push_back(d);
        }
        // every d must go to some x in E with e(x) naming q(d)
        bool all = true;
        for (auto d : dc) {
            const auto& target = sq.b().name(sq.q()(d));
            bool some = false;
            for (std::size_t x = 0; x < e.dom().size(); ++x) {
                some = some || e.cod().name(e(x)) == target;
            }
            all = all && some;
        }
        if (all) return true;
    }
    return false;
}

} // namespace oracle
