#include "indkernel/topology.hpp"

#include "indkernel/proof.hpp"

namespace indkernel {

CoverPresentation::CoverPresentation(Carrier base, std::vector<CoverAxiom> axioms)
    : base_(std::move(base)), axioms_(std::move(axioms)) {
    for (const auto& ax : axioms_) {
        if (ax.point >= base_.size()) throw UnknownElement("axiom covers a point outside the base");
        if (!(ax.cover.carrier() == base_)) throw CodomainMismatch("axiom cover is not a subset of the base");
    }
}

InductiveDefinition to_inductive_definition(const CoverPresentation& cp) {
    std::vector<Rule> rules;
    rules.reserve(cp.axioms().size());
    for (const auto& ax : cp.axioms()) rules.push_back(Rule{ax.cover, ax.point});
    return InductiveDefinition(cp.base(), std::move(rules));
}

namespace {
void check_point(const CoverPresentation& cp, std::size_t point) {
    if (point >= cp.base().size()) {
        throw UnknownElement("point index " + std::to_string(point) + " is not a basic open");
    }
}
} // namespace

bool covers(const CoverPresentation& cp, std::size_t point, const Subset& u) {
    check_point(cp, point);
    return closure(to_inductive_definition(cp), u).contains(point);
}

std::optional<Subset> compact_subcover(const CoverPresentation& cp, std::size_t point, const Subset& u) {
    check_point(cp, point);
    return witness(to_inductive_definition(cp), u, point);
}

} // namespace indkernel
