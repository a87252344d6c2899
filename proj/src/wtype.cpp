#include "indkernel/wtype.hpp"

#include <sstream>

#include "dot_util.hpp"

namespace indkernel {

Signature::Signature(Carrier labels, std::vector<Carrier> arities)
    : labels_(std::move(labels)), arities_(std::move(arities)) {
    if (arities_.size() != labels_.size()) {
        throw ArityMismatch("signature has " + std::to_string(labels_.size()) + " labels but " +
                            std::to_string(arities_.size()) + " arities");
    }
}

Signature Signature::from_map(const FinMap& f) {
    std::vector<Carrier> arities;
    arities.reserve(f.cod().size());
    for (std::size_t a = 0; a < f.cod().size(); ++a) arities.push_back(fiber_carrier(f, a));
    return Signature(f.cod(), std::move(arities));
}

const Carrier& Signature::arity(std::size_t label) const {
    if (label >= arities_.size()) {
        throw UnknownElement("label index " + std::to_string(label) + " out of range");
    }
    return arities_[label];
}

bool Signature::has_nullary() const noexcept {
    for (const auto& a : arities_) {
        if (a.empty()) return true;
    }
    return false;
}

std::size_t WTree::node_count() const {
    return fold<std::size_t>(*this, [](std::size_t, std::span<const std::size_t> kids) {
        std::size_t n = 1;
        for (auto k : kids) n += k;
        return n;
    });
}

std::size_t WTree::depth() const {
    return fold<std::size_t>(*this, [](std::size_t, std::span<const std::size_t> kids) {
        std::size_t d = 0;
        for (auto k : kids) d = std::max(d, k);
        return d + 1;
    });
}

bool operator==(const WTree& lhs, const WTree& rhs) {
    if (lhs.node_ == rhs.node_) return true;
    if (lhs.label() != rhs.label() || lhs.children().size() != rhs.children().size()) return false;
    for (std::size_t i = 0; i < lhs.children().size(); ++i) {
        if (!(lhs.children()[i] == rhs.children()[i])) return false;
    }
    return true;
}

WTree sup(const Signature& sig, std::size_t label, std::vector<WTree> children) {
    const auto& slots = sig.arity(label);
    if (children.size() != slots.size()) {
        throw ArityMismatch("label '" + sig.labels().name(label) + "' takes " +
                            std::to_string(slots.size()) + " children, got " +
                            std::to_string(children.size()));
    }
    return WTree(std::make_shared<const WTree::Node>(WTree::Node{label, std::move(children)}));
}

WTree sup(const Signature& sig, std::string_view label,
          const std::map<std::string, WTree, std::less<>>& children) {
    auto a = sig.labels().index_of(label);
    const auto& slots = sig.arity(a);

    std::vector<std::string> missing;
    std::vector<std::string> extra;
    std::vector<WTree> ordered;
    ordered.reserve(slots.size());
    for (const auto& slot : slots.names()) {
        auto it = children.find(slot);
        if (it == children.end()) {
            missing.push_back(slot);
        } else {
            ordered.push_back(it->second);
        }
    }
    for (const auto& [slot, _] : children) {
        if (!slots.contains(slot)) extra.push_back(slot);
    }
    if (!missing.empty() || !extra.empty()) {
        auto join = [](const std::vector<std::string>& xs) {
            std::string out;
            for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
            return out;
        };
        std::string msg = "children of '" + std::string(label) + "' do not match its arity";
        if (!missing.empty()) msg += "; missing slots: " + join(missing);
        if (!extra.empty()) msg += "; extra slots: " + join(extra);
        throw ArityMismatch(msg);
    }
    return sup(sig, a, std::move(ordered));
}

std::vector<WTree> subtrees(const WTree& tree) {
    std::vector<WTree> out;
    std::vector<WTree> stack{tree};
    while (!stack.empty()) {
        auto t = stack.back();
        stack.pop_back();
        out.push_back(t);
        auto kids = t.children();
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

// Generator -------------------------------------------------------------

TreeGenerator::TreeGenerator(Signature sig, std::size_t max_depth)
    : sig_(std::move(sig)), max_depth_(std::max<std::size_t>(max_depth, 1)) {
    for (std::size_t a = 0; a < sig_.labels().size(); ++a) {
        (sig_.arity(a).empty() ? nullary_ : branching_).push_back(a);
    }
    if (nullary_.empty()) throw EmptyWType("signature has no nullary label, W(f) is empty");
}

WTree TreeGenerator::operator()(std::mt19937_64& rng) const { return grow(rng, 1); }

WTree TreeGenerator::grow(std::mt19937_64& rng, std::size_t depth) const {
    bool leaf = branching_.empty() || depth >= max_depth_;
    if (!leaf) {
        std::bernoulli_distribution stop(static_cast<double>(depth) / static_cast<double>(max_depth_));
        leaf = stop(rng);
    }
    const auto& pool = leaf ? nullary_ : branching_;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    auto label = pool[pick(rng)];

    std::vector<WTree> children;
    children.reserve(sig_.arity(label).size());
    for (std::size_t s = 0; s < sig_.arity(label).size(); ++s) children.push_back(grow(rng, depth + 1));
    return sup(sig_, label, std::move(children));
}

// Serialization ---------------------------------------------------------

nlohmann::ordered_json signature_to_json(const Signature& sig) {
    auto labels = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < sig.labels().size(); ++a) {
        labels.push_back({{"name", sig.labels().name(a)}, {"slots", sig.arity(a).names()}});
    }
    return {{"labels", labels}};
}

Signature signature_from_json(const nlohmann::ordered_json& j) {
    std::vector<std::string> names;
    std::vector<Carrier> arities;
    for (const auto& entry : j.at("labels")) {
        names.push_back(entry.at("name").get<std::string>());
        arities.emplace_back(entry.value("slots", std::vector<std::string>{}));
    }
    return Signature(Carrier(std::move(names)), std::move(arities));
}

nlohmann::ordered_json tree_to_json(const Signature& sig, const WTree& tree) {
    nlohmann::ordered_json j;
    j["label"] = sig.labels().name(tree.label());
    if (!tree.is_leaf()) {
        auto& kids = j["children"] = nlohmann::ordered_json::object();
        const auto& slots = sig.arity(tree.label());
        for (std::size_t s = 0; s < slots.size(); ++s) {
            kids[slots.name(s)] = tree_to_json(sig, tree.children()[s]);
        }
    }
    return j;
}

WTree tree_from_json(const Signature& sig, const nlohmann::ordered_json& j) {
    std::map<std::string, WTree, std::less<>> children;
    if (auto it = j.find("children"); it != j.end()) {
        for (const auto& [slot, sub] : it->items()) children.emplace(slot, tree_from_json(sig, sub));
    }
    return sup(sig, j.at("label").get<std::string>(), children);
}

std::string tree_to_dot(const Signature& sig, const WTree& tree) {
    std::ostringstream out;
    out << "digraph wtree {\n";
    std::size_t next = 0;
    auto emit = [&](auto&& self, const WTree& t) -> std::size_t {
        auto id = next++;
        out << "  n" << id << " [label=\"" << detail::dot_escape(sig.labels().name(t.label())) << "\""
            << (t.is_leaf() ? ", shape=box" : "") << "];\n";
        const auto& slots = sig.arity(t.label());
        for (std::size_t s = 0; s < t.children().size(); ++s) {
            auto child = self(self, t.children()[s]);
            out << "  n" << id << " -> n" << child << " [label=\"" << detail::dot_escape(slots.name(s))
                << "\"];\n";
        }
        return id;
    };
    emit(emit, tree);
    out << "}\n";
    return out.str();
}

} // namespace indkernel
