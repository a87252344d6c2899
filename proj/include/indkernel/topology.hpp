#pragma once

// Inductively generated formal covers. An axiom (a, X) reads "X covers a";
// the generated cover relation a ◁ U holds when a lies in the closure of U
// under the rules (X, a). There is no positivity predicate and no
// localisation along a preorder: axioms are taken as given.

#include <cstddef>
#include <optional>
#include <vector>

#include "indkernel/inddef.hpp"

namespace indkernel {

struct CoverAxiom {
    std::size_t point;
    Subset cover;
};

class CoverPresentation {
public:
    /// Throws CodomainMismatch or UnknownElement for axioms outside `base`.
    explicit CoverPresentation(Carrier base, std::vector<CoverAxiom> axioms = {});

    const Carrier& base() const noexcept { return base_; }
    const std::vector<CoverAxiom>& axioms() const noexcept { return axioms_; }

private:
    Carrier base_;
    std::vector<CoverAxiom> axioms_;
};

/// One rule (X, a) per axiom (a, X), over the same carrier.
InductiveDefinition to_inductive_definition(const CoverPresentation& cp);

/// a ◁ U. Throws UnknownElement for a bad point.
bool covers(const CoverPresentation& cp, std::size_t point, const Subset& u);

/// Some V ⊆ U with a ◁ V, or nullopt when a is not covered by U.
std::optional<Subset> compact_subcover(const CoverPresentation& cp, std::size_t point, const Subset& u);

} // namespace indkernel
