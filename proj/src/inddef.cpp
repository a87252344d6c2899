#include "indkernel/inddef.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace indkernel {

Rule make_rule(const Carrier& carrier, std::initializer_list<std::string_view> premises,
               std::string_view conclusion) {
    return Rule{Subset::of_names(carrier, premises), carrier.index_of(conclusion)};
}

InductiveDefinition::InductiveDefinition(Carrier carrier, std::vector<Rule> rules)
    : carrier_(std::move(carrier)), watchers_(carrier_.size()) {
    std::set<std::pair<std::vector<std::uint64_t>, std::size_t>> seen;
    for (auto& rule : rules) {
        if (!(rule.premises.carrier() == carrier_)) {
            throw CodomainMismatch("rule premises are not a subset of the definition's carrier");
        }
        if (rule.conclusion >= carrier_.size()) {
            throw UnknownElement("rule conclusion index " + std::to_string(rule.conclusion) +
                                 " out of range");
        }
        auto words = rule.premises.words();
        if (!seen.emplace(std::vector<std::uint64_t>(words.begin(), words.end()), rule.conclusion).second) {
            ++duplicates_removed_;
            continue;
        }
        rules_.push_back(std::move(rule));
    }
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        for (auto e : rules_[r].premises.indices()) watchers_[e].push_back(r);
    }
}

std::string InductiveDefinition::describe(std::size_t rule) const {
    const auto& r = rules_.at(rule);
    std::string out;
    for (const auto& n : r.premises.names()) out += n + " ";
    out += "-> " + carrier_.name(r.conclusion);
    return out;
}

bool is_phi_closed(const InductiveDefinition& phi, const Subset& set) {
    for (const auto& rule : phi.rules()) {
        if (rule.premises.is_subset_of(set) && !set.contains(rule.conclusion)) return false;
    }
    return true;
}

Saturation saturate(const InductiveDefinition& phi, const Subset& seed) {
    if (!(seed.carrier() == phi.carrier())) {
        throw CodomainMismatch("seed is not a subset of the definition's carrier");
    }
    const auto n = phi.carrier().size();
    const auto& rules = phi.rules();

    Saturation sat;
    sat.entry_stage.assign(n, Saturation::never);
    sat.first_rule.assign(n, std::nullopt);
    sat.stages.push_back(seed);

    std::vector<std::size_t> remaining(rules.size());
    // conclusion -> least rule index firing this stage
    std::map<std::size_t, std::size_t> fired;
    auto fire = [&](std::size_t r) {
        auto x = rules[r].conclusion;
        if (sat.stages.back().contains(x)) return;
        auto [it, inserted] = fired.emplace(x, r);
        if (!inserted) it->second = std::min(it->second, r);
    };

    for (std::size_t r = 0; r < rules.size(); ++r) {
        remaining[r] = rules[r].premises.count();
        if (remaining[r] == 0) fire(r);
    }

    auto delta = seed.indices();
    for (auto s : delta) sat.entry_stage[s] = 0;

    for (;;) {
        for (auto e : delta) {
            for (auto r : phi.watchers(e)) {
                if (--remaining[r] == 0) fire(r);
            }
        }
        if (fired.empty()) break;

        const auto stage = sat.stages.size();
        Subset next = sat.stages.back();
        delta.clear();
        for (auto [x, r] : fired) {
            next.insert(x);
            sat.entry_stage[x] = stage;
            sat.first_rule[x] = r;
            delta.push_back(x);
        }
        fired.clear();
        sat.stages.push_back(std::move(next));
    }
    return sat;
}

Subset closure(const InductiveDefinition& phi, const Subset& seed) { return saturate(phi, seed).closure(); }

std::vector<Subset> closure_stages(const InductiveDefinition& phi, const Subset& seed) {
    return saturate(phi, seed).stages;
}

Subset naive_closure_oracle(const InductiveDefinition& phi, const Subset& seed) {
    if (!(seed.carrier() == phi.carrier())) {
        throw CodomainMismatch("seed is not a subset of the definition's carrier");
    }
    std::vector<bool> in(phi.carrier().size(), false);
    for (auto s : seed.indices()) in[s] = true;

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : phi.rules()) {
            if (in[rule.conclusion]) continue;
            bool applies = true;
            for (auto b : rule.premises.indices()) applies = applies && in[b];
            if (applies) {
                in[rule.conclusion] = true;
                changed = true;
            }
        }
    }

    Subset out(phi.carrier());
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i]) out.insert(i);
    }
    return out;
}

} // namespace indkernel
