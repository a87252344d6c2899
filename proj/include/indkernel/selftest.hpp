#pragma once

#include <cstdint>
#include <optional>
#include <ostream>

namespace indkernel {

/// INDKERNEL_SEED if set and numeric.
std::optional<std::uint64_t> seed_from_env();

inline constexpr std::uint64_t default_selftest_seed = 20260115;

/// Runs the randomized invariant suites, one line per suite. Returns the
/// number of failing suites.
int run_selftest(std::ostream& out, std::uint64_t seed);

} // namespace indkernel
