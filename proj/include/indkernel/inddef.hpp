#pragma once

// Inductive definitions on a finite carrier and their least fixed points.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "indkernel/finite.hpp"

namespace indkernel {

/// "If every premise holds, the conclusion holds."
struct Rule {
    Subset premises;
    std::size_t conclusion;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Rule from element names.
Rule make_rule(const Carrier& carrier, std::initializer_list<std::string_view> premises,
               std::string_view conclusion);

/// A carrier S together with a set of rules on it. Duplicate rules are
/// dropped at construction (first occurrence kept); the count is available
/// through duplicates_removed() so callers can warn.
class InductiveDefinition {
public:
    explicit InductiveDefinition(Carrier carrier, std::vector<Rule> rules = {});

    const Carrier& carrier() const noexcept { return carrier_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }
    std::size_t duplicates_removed() const noexcept { return duplicates_removed_; }

    /// Rules having `element` among their premises, in declaration order.
    const std::vector<std::size_t>& watchers(std::size_t element) const { return watchers_.at(element); }

    /// "a b -> c" style rendering of one rule.
    std::string describe(std::size_t rule) const;

private:
    Carrier carrier_;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> watchers_;
    std::size_t duplicates_removed_ = 0;
};

bool is_phi_closed(const InductiveDefinition& phi, const Subset& set);

/// Stage-by-stage record of a semi-naive saturation, with the provenance
/// needed to rebuild a derivation for every derived element.
struct Saturation {
    static constexpr std::size_t never = std::numeric_limits<std::size_t>::max();

    /// U = S_0 ⊆ S_1 ⊆ ... ⊆ S_k, ending at the first fixpoint.
    std::vector<Subset> stages;
    /// Stage at which each element entered, or `never`.
    std::vector<std::size_t> entry_stage;
    /// The first rule in declaration order that derived the element at its
    /// entry stage; empty for seed elements and non-members.
    std::vector<std::optional<std::size_t>> first_rule;

    const Subset& closure() const { return stages.back(); }
};

Saturation saturate(const InductiveDefinition& phi, const Subset& seed);

/// I(Φ, U): the least Φ-closed superset of `seed`.
Subset closure(const InductiveDefinition& phi, const Subset& seed);

std::vector<Subset> closure_stages(const InductiveDefinition& phi, const Subset& seed);

/// Reference fixpoint: apply every rule until nothing changes. Shares no
/// code with saturate().
Subset naive_closure_oracle(const InductiveDefinition& phi, const Subset& seed);

} // namespace indkernel
