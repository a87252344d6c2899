#include "indkernel/proof.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "dot_util.hpp"

namespace indkernel {

namespace {

std::string rule_label_name(std::size_t rule) { return "rule#" + std::to_string(rule); }

Signature make_signature(const InductiveDefinition& phi) {
    std::vector<std::string> names;
    std::vector<Carrier> arities;
    for (std::size_t r = 0; r < phi.rules().size(); ++r) {
        names.push_back(rule_label_name(r));
        arities.push_back(phi.rules()[r].premises.as_carrier());
    }
    for (const auto& s : phi.carrier().names()) {
        names.push_back(s);
        arities.emplace_back();
    }
    return Signature(Carrier(std::move(names)), std::move(arities));
}

void check_seed(const InductiveDefinition& phi, const Subset& seed) {
    if (!(seed.carrier() == phi.carrier())) {
        throw CodomainMismatch("seed is not a subset of the definition's carrier");
    }
}

void check_goal(const InductiveDefinition& phi, std::size_t goal) {
    if (goal >= phi.carrier().size()) {
        throw UnknownElement("goal index " + std::to_string(goal) + " is not an element of the carrier");
    }
}

} // namespace

ProofSignature::ProofSignature(InductiveDefinition phi) : phi_(std::move(phi)), sig_(make_signature(phi_)) {
    premises_.reserve(phi_.rules().size());
    for (const auto& rule : phi_.rules()) premises_.push_back(rule.premises.indices());
}

std::size_t ProofSignature::rule_label(std::size_t rule) const {
    if (rule >= rule_count()) throw UnknownElement("rule index " + std::to_string(rule) + " out of range");
    return rule;
}

std::size_t ProofSignature::element_label(std::size_t element) const {
    check_goal(phi_, element);
    return rule_count() + element;
}

std::size_t ProofSignature::rule_of(std::size_t label) const {
    if (!is_rule_label(label)) throw UnknownElement("label " + std::to_string(label) + " is not a rule");
    return label;
}

std::size_t ProofSignature::element_of(std::size_t label) const {
    if (is_rule_label(label) || label >= label_count()) {
        throw UnknownElement("label " + std::to_string(label) + " is not an element");
    }
    return label - rule_count();
}

std::size_t ProofSignature::premise_at(std::size_t label, std::size_t slot) const {
    return premises_.at(rule_of(label)).at(slot);
}

WTree ProofSignature::assumption(std::size_t element) const { return sup(sig_, element_label(element), {}); }

WTree ProofSignature::rule_app(std::size_t rule, std::vector<WTree> children) const {
    return sup(sig_, rule_label(rule), std::move(children));
}

Square ProofSignature::collection_square() const {
    const auto& labels = sig_.labels();
    std::vector<std::string> psi_names;
    std::vector<std::size_t> f_table;
    for (std::size_t r = 0; r < rule_count(); ++r) {
        for (auto b : premises_[r]) {
            psi_names.push_back(pair_name(labels.name(r), carrier().name(b)));
            f_table.push_back(r);
        }
    }
    Carrier psi(std::move(psi_names));
    FinMap f(psi, labels, std::move(f_table));
    return Square(f, FinMap::identity(labels), f, FinMap::identity(psi));
}

// conc / ass / well-formedness ------------------------------------------

std::size_t conc(const ProofSignature& ps, const WTree& w) {
    if (ps.is_rule_label(w.label())) return ps.definition().rules()[w.label()].conclusion;
    return ps.element_of(w.label());
}

Subset ass(const ProofSignature& ps, const WTree& w) {
    if (!ps.is_rule_label(w.label())) {
        Subset s(ps.carrier());
        s.insert(ps.element_of(w.label()));
        return s;
    }
    Subset s(ps.carrier());
    for (const auto& child : w.children()) s |= ass(ps, child);
    return s;
}

bool is_well_formed_node(const ProofSignature& ps, const WTree& w) {
    if (w.label() >= ps.label_count()) return false;
    if (w.children().size() != ps.signature().arity(w.label()).size()) return false;
    if (!ps.is_rule_label(w.label())) return true;
    for (std::size_t slot = 0; slot < w.children().size(); ++slot) {
        const auto& child = w.children()[slot];
        if (child.label() >= ps.label_count()) return false;
        if (conc(ps, child) != ps.premise_at(w.label(), slot)) return false;
    }
    return true;
}

bool is_proof(const ProofSignature& ps, const WTree& w) {
    for (const auto& t : subtrees(w)) {
        if (!is_well_formed_node(ps, t)) return false;
    }
    return true;
}

// Synthesis -------------------------------------------------------------

std::optional<WTree> synthesize_proof(const ProofSignature& ps, const Subset& seed, std::size_t goal) {
    const auto& phi = ps.definition();
    check_goal(phi, goal);
    check_seed(phi, seed);

    auto sat = saturate(phi, seed);
    if (!sat.closure().contains(goal)) return std::nullopt;

    // Premises of the chosen rule entered strictly earlier, so the recursion
    // terminates; shared sub-derivations are built once.
    std::vector<std::optional<WTree>> memo(phi.carrier().size());
    std::function<WTree(std::size_t)> build = [&](std::size_t x) -> WTree {
        if (memo[x]) return *memo[x];
        WTree t = [&] {
            if (!sat.first_rule[x]) return ps.assumption(x);
            auto r = *sat.first_rule[x];
            std::vector<WTree> children;
            for (auto b : phi.rules()[r].premises.indices()) children.push_back(build(b));
            return ps.rule_app(r, std::move(children));
        }();
        memo[x] = t;
        return t;
    };
    return build(goal);
}

Subset characterize(const InductiveDefinition& phi, const Subset& seed, std::size_t depth) {
    check_seed(phi, seed);
    const auto n = phi.carrier().size();
    // The provable-at-depth sets increase with depth and stop changing after
    // at most |S| + 1 steps.
    depth = std::min(depth, n + 2);

    std::vector<std::vector<std::size_t>> by_conclusion(n);
    for (std::size_t r = 0; r < phi.rules().size(); ++r) by_conclusion[phi.rules()[r].conclusion].push_back(r);

    enum : signed char { unknown = -1, no = 0, yes = 1 };
    std::vector<signed char> memo(n * (depth + 1), unknown);
    std::function<bool(std::size_t, std::size_t)> provable = [&](std::size_t x, std::size_t d) -> bool {
        if (d == 0) return false;
        auto& slot = memo[x * (depth + 1) + d];
        if (slot != unknown) return slot == yes;
        bool found = seed.contains(x);
        for (auto r = by_conclusion[x].begin(); !found && r != by_conclusion[x].end(); ++r) {
            bool all = true;
            for (auto b : phi.rules()[*r].premises.indices()) {
                if (!provable(b, d - 1)) {
                    all = false;
                    break;
                }
            }
            found = all;
        }
        slot = found ? yes : no;
        return found;
    };

    Subset out(phi.carrier());
    for (std::size_t x = 0; x < n; ++x) {
        if (provable(x, depth)) out.insert(x);
    }
    return out;
}

std::optional<Subset> witness(const InductiveDefinition& phi, const Subset& seed, std::size_t goal) {
    ProofSignature ps(phi);
    auto proof = synthesize_proof(ps, seed, goal);
    if (!proof) return std::nullopt;
    return ass(ps, *proof);
}

std::vector<Subset> compactness_basis(const InductiveDefinition& phi) {
    const auto& carrier = phi.carrier();
    const auto n = carrier.size();
    using Key = std::vector<std::uint64_t>;
    using Family = std::set<Key>;

    auto key_of = [](const Subset& s) {
        auto w = s.words();
        return Key(w.begin(), w.end());
    };
    auto unite = [](const Key& a, const Key& b) {
        Key out(a);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] |= b[i];
        return out;
    };

    // level[x]: assumption sets of proofs of depth <= d concluding x.
    // Depth 0 has no proofs.
    std::vector<Family> level(n);
    for (std::size_t depth = 1; depth <= n + 1; ++depth) {
        std::vector<Family> next(n);
        for (std::size_t x = 0; x < n; ++x) {
            Subset single(carrier);
            single.insert(x);
            next[x].insert(key_of(single));
        }
        for (const auto& rule : phi.rules()) {
            Family combos{key_of(Subset(carrier))};
            for (auto b : rule.premises.indices()) {
                Family grown;
                for (const auto& partial : combos) {
                    for (const auto& sub : level[b]) grown.insert(unite(partial, sub));
                }
                combos = std::move(grown);
            }
            next[rule.conclusion].insert(combos.begin(), combos.end());
        }
        if (next == level) break;
        level = std::move(next);
    }

    Family all;
    for (const auto& fam : level) all.insert(fam.begin(), fam.end());

    std::vector<Subset> out;
    out.reserve(all.size());
    for (const auto& key : all) {
        Subset s(carrier);
        for (std::size_t i = 0; i < n; ++i) {
            if ((key[i / 64] >> (i % 64)) & 1U) s.insert(i);
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Output ----------------------------------------------------------------

nlohmann::ordered_json proof_to_json(const ProofSignature& ps, const WTree& w) {
    nlohmann::ordered_json j;
    if (!ps.is_rule_label(w.label())) {
        j["kind"] = "assumption";
        j["element"] = ps.carrier().name(ps.element_of(w.label()));
        return j;
    }
    j["kind"] = "rule";
    j["rule"] = w.label();
    j["conclusion"] = ps.carrier().name(conc(ps, w));
    auto& kids = j["children"] = nlohmann::ordered_json::object();
    for (std::size_t slot = 0; slot < w.children().size(); ++slot) {
        kids[ps.carrier().name(ps.premise_at(w.label(), slot))] = proof_to_json(ps, w.children()[slot]);
    }
    return j;
}

std::string proof_to_dot(const ProofSignature& ps, const WTree& w) {
    std::ostringstream out;
    out << "digraph proof {\n";
    std::size_t next = 0;
    auto emit = [&](auto&& self, const WTree& t) -> std::size_t {
        auto id = next++;
        auto c = detail::dot_escape(ps.carrier().name(conc(ps, t)));
        out << "  n" << id << " [label=\"" << c << "\\n";
        if (ps.is_rule_label(t.label())) {
            out << "rule " << t.label() << ": " << detail::dot_escape(ps.definition().describe(t.label()));
        } else {
            out << "assumption";
        }
        out << "\"" << (t.is_leaf() ? ", shape=box" : "") << "];\n";
        for (std::size_t slot = 0; slot < t.children().size(); ++slot) {
            auto child = self(self, t.children()[slot]);
            out << "  n" << id << " -> n" << child << ";\n";
        }
        return id;
    };
    emit(emit, w);
    out << "}\n";
    return out.str();
}

std::string proof_to_text(const ProofSignature& ps, const WTree& w) {
    std::ostringstream out;
    auto emit = [&](auto&& self, const WTree& t, std::size_t indent) -> void {
        out << std::string(indent * 2, ' ') << ps.carrier().name(conc(ps, t));
        if (ps.is_rule_label(t.label())) {
            out << "  by rule " << t.label() << " (" << ps.definition().describe(t.label()) << ")\n";
        } else {
            out << "  assumption\n";
        }
        for (const auto& child : t.children()) self(self, child, indent + 1);
    };
    emit(emit, w, 0);
    return out.str();
}

} // namespace indkernel
