#pragma once

// Random instances for property checks. Everything is driven by a caller
// supplied std::mt19937_64 so runs are reproducible from a seed.

#include <cstddef>
#include <random>
#include <string_view>

#include "indkernel/inddef.hpp"
#include "indkernel/square.hpp"

namespace indkernel {

/// prefix0, prefix1, ...
Carrier numbered_carrier(std::string_view prefix, std::size_t n);

struct DefinitionShape {
    std::size_t min_elements = 1;
    std::size_t max_elements = 6;
    std::size_t max_rules = 12;
    std::size_t max_premises = 3;
};

InductiveDefinition random_definition(std::mt19937_64& rng, const DefinitionShape& shape);

/// Each element independently with probability `density`.
Subset random_subset(std::mt19937_64& rng, const Carrier& carrier, double density = 0.5);

/// Uniform map; `cod` must be inhabited unless `dom` is empty.
FinMap random_map(std::mt19937_64& rng, const Carrier& dom, const Carrier& cod);

/// Uniform-ish surjection from a fresh domain of `domain_size` >= |cod|
/// elements named `prefix0`, ... onto `cod`.
FinMap random_surjection(std::mt19937_64& rng, std::string_view prefix, std::size_t domain_size,
                         const Carrier& cod);

/// A commuting square with every carrier of size <= max_size. D is a random
/// multiset of matched pairs, so both covering and non-covering squares
/// occur.
Square random_square(std::mt19937_64& rng, std::size_t max_size);

} // namespace indkernel
