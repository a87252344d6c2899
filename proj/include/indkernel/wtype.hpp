#pragma once

// Well-founded trees over a finite signature f: B -> A. A node labelled a
// has one child per argument slot in the fiber B_a; labels with an empty
// fiber are leaves.

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "indkernel/finite.hpp"

namespace indkernel {

/// The shape datum of a W-type: labels A and, per label, its slot carrier B_a.
/// Slot carriers are separate namespaces; two labels may reuse a slot name.
class Signature {
public:
    Signature(Carrier labels, std::vector<Carrier> arities);

    /// arity(a) = the fiber of f over a, slots named after elements of B.
    static Signature from_map(const FinMap& f);

    const Carrier& labels() const noexcept { return labels_; }
    const Carrier& arity(std::size_t label) const;

    bool has_nullary() const noexcept;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    Carrier labels_;
    std::vector<Carrier> arities_;
};

/// An immutable tree. Copies share nodes; equality is structural.
class WTree {
public:
    std::size_t label() const noexcept { return node_->label; }
    /// Children in slot order of arity(label).
    std::span<const WTree> children() const noexcept { return node_->children; }
    bool is_leaf() const noexcept { return node_->children.empty(); }

    std::size_t node_count() const;
    /// Leaves have depth 1.
    std::size_t depth() const;

    friend bool operator==(const WTree& lhs, const WTree& rhs);

private:
    struct Node {
        std::size_t label;
        std::vector<WTree> children;
    };

    explicit WTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    friend WTree sup(const Signature&, std::size_t, std::vector<WTree>);

    std::shared_ptr<const Node> node_;
};

/// sup_a(t). Children are given in slot order; throws ArityMismatch when the
/// count differs from |arity(a)| and UnknownElement for a bad label.
WTree sup(const Signature& sig, std::size_t label, std::vector<WTree> children);

/// sup_a(t) with children keyed by slot name. ArityMismatch lists every
/// missing and extra slot.
WTree sup(const Signature& sig, std::string_view label,
          const std::map<std::string, WTree, std::less<>>& children);

/// Structural recursion. `step(label, child_results)` is called once per
/// node, bottom-up; leaves receive an empty span.
template <class R, class Step>
R fold(const WTree& tree, Step&& step) {
    std::vector<R> results;
    results.reserve(tree.children().size());
    for (const auto& child : tree.children()) results.push_back(fold<R>(child, step));
    return step(tree.label(), std::span<const R>(results));
}

/// The tree and all of its descendants in preorder.
std::vector<WTree> subtrees(const WTree& tree);

/// Depth-bounded random trees. Nullary labels become more likely as depth
/// grows and are forced at `max_depth`.
class TreeGenerator {
public:
    /// Throws EmptyWType if the signature has no nullary label.
    TreeGenerator(Signature sig, std::size_t max_depth);

    WTree operator()(std::mt19937_64& rng) const;

    const Signature& signature() const noexcept { return sig_; }

private:
    WTree grow(std::mt19937_64& rng, std::size_t depth) const;

    Signature sig_;
    std::size_t max_depth_;
    std::vector<std::size_t> nullary_;
    std::vector<std::size_t> branching_;
};

nlohmann::ordered_json signature_to_json(const Signature& sig);
Signature signature_from_json(const nlohmann::ordered_json& j);

/// {"label": name, "children": {slot: subtree, ...}}; leaves omit children.
nlohmann::ordered_json tree_to_json(const Signature& sig, const WTree& tree);
WTree tree_from_json(const Signature& sig, const nlohmann::ordered_json& j);

std::string tree_to_dot(const Signature& sig, const WTree& tree);

} // namespace indkernel
