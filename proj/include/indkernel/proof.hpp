#pragma once

// Derivations as well-founded trees. For an inductive definition Φ on S the
// proof signature has one label per rule and one per element of S; a rule
// (X, a) takes one argument slot per premise b in X, an element takes none.
// A tree over this signature is a proof when every node is well-formed:
// the child in slot b concludes b.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indkernel/inddef.hpp"
#include "indkernel/square.hpp"
#include "indkernel/wtype.hpp"

namespace indkernel {

class ProofSignature {
public:
    explicit ProofSignature(InductiveDefinition phi);

    const InductiveDefinition& definition() const noexcept { return phi_; }
    const Signature& signature() const noexcept { return sig_; }
    const Carrier& carrier() const noexcept { return phi_.carrier(); }

    std::size_t rule_count() const noexcept { return phi_.rules().size(); }
    std::size_t label_count() const noexcept { return sig_.labels().size(); }

    // Labels are the rules in declaration order followed by the elements.
    bool is_rule_label(std::size_t label) const noexcept { return label < rule_count(); }
    std::size_t rule_label(std::size_t rule) const;
    std::size_t element_label(std::size_t element) const;
    std::size_t rule_of(std::size_t label) const;
    std::size_t element_of(std::size_t label) const;

    /// The premise a rule label expects in the given slot.
    std::size_t premise_at(std::size_t label, std::size_t slot) const;

    /// Leaf concluding and assuming `element`.
    WTree assumption(std::size_t element) const;
    /// Rule application; children in premise order.
    WTree rule_app(std::size_t rule, std::vector<WTree> children) const;

    /// The collection square the signature instantiates: B = Ψ = {(X, a, b)},
    /// f: Ψ -> Φ + S, C = Φ + S with p = id, and D = Ψ with g = f, q = id.
    Square collection_square() const;

private:
    InductiveDefinition phi_;
    Signature sig_;
    std::vector<std::vector<std::size_t>> premises_;
};

/// Conclusion of the root: the element itself, or the rule's conclusion.
std::size_t conc(const ProofSignature& ps, const WTree& w);

/// Assumptions: {s} for an assumption leaf, the union over the children
/// for a rule application.
Subset ass(const ProofSignature& ps, const WTree& w);

/// The root alone is well-formed (children are not inspected beyond their
/// conclusions). False for trees not built over this signature.
bool is_well_formed_node(const ProofSignature& ps, const WTree& w);

/// Every subtree is well-formed.
bool is_proof(const ProofSignature& ps, const WTree& w);

/// A proof of `goal` from assumptions in `seed`, or nullopt when the goal is
/// not in the closure. Uses the first rule in declaration order at the
/// earliest closure stage, so depth <= 1 + entry stage of the goal.
/// Throws UnknownElement for a bad goal.
std::optional<WTree> synthesize_proof(const ProofSignature& ps, const Subset& seed, std::size_t goal);

/// { conc(w) : w a proof of depth <= depth with ass(w) ⊆ seed }, by
/// memoised search over (goal, depth).
Subset characterize(const InductiveDefinition& phi, const Subset& seed, std::size_t depth);

/// ass of the synthesized proof: V ⊆ seed with goal ∈ I(Φ, V).
std::optional<Subset> witness(const InductiveDefinition& phi, const Subset& seed, std::size_t goal);

/// { ass(w) : w a proof of depth <= |S| + 1 }, sorted by size then members.
std::vector<Subset> compactness_basis(const InductiveDefinition& phi);

nlohmann::ordered_json proof_to_json(const ProofSignature& ps, const WTree& w);
/// Nodes labelled by their conclusion; leaves drawn as boxes.
std::string proof_to_dot(const ProofSignature& ps, const WTree& w);
/// Indented, one node per line.
std::string proof_to_text(const ProofSignature& ps, const WTree& w);

} // namespace indkernel
