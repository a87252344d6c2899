#pragma once

// JSON instance files for the square and family checkers, and the JSON
// reports the checkers emit.
//
//   {
//     "carriers": { "A": ["a0", "a1"], "B": ["b0"], ... },
//     "maps": { "f": { "from": "B", "to": "A", "table": { "b0": "a0" } }, ... },
//     "square": { "f": "f", "p": "p", "g": "g", "q": "q" },
//     "family": { "base": "X", "members": ["p0", "p1"] },
//     "collection_family": ["Y0", "Y1"]
//   }
//
// A file carries one of "square", "family" or "collection_family".

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "indkernel/square.hpp"

namespace indkernel {

struct Instance {
    std::map<std::string, Carrier> carriers;
    std::map<std::string, FinMap> maps;
    nlohmann::ordered_json document;

    const Carrier& carrier(const std::string& name) const;
    const FinMap& map(const std::string& name) const;
};

/// Throws InvalidArgument for schema violations and the finite-core errors
/// for bad carriers or maps.
Instance load_instance(const nlohmann::ordered_json& doc);

Square square_from_instance(const Instance& inst);
SurjectionFamily surjection_family_from_instance(const Instance& inst);
std::vector<Carrier> collection_family_from_instance(const Instance& inst);

/// {"domain": [...], "codomain": [...], "table": {x: y, ...}}
nlohmann::ordered_json map_to_json(const FinMap& m);

nlohmann::ordered_json square_to_json(const Square& sq);

nlohmann::ordered_json covering_to_json(const Square& sq, const CoveringReport& report);
nlohmann::ordered_json collection_to_json(const Square& sq, const CollectionReport& report);
nlohmann::ordered_json amc_family_to_json(const AmcFamilyReport& report);
nlohmann::ordered_json collection_family_to_json(const CollectionFamilyReport& report);

} // namespace indkernel
