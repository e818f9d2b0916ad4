#pragma once

/**
 * @file laws.hpp
 * @brief Seeded property suites over all modules.
 *
 * Each suite draws random operands from a Sampler and checks algebraic laws
 * exactly. A report carries the number of checks, the first counterexamples
 * found, and pinned results that are expected to fail (non-reflexive
 * instances), which do not count as violations.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace residua {

struct LawReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> pinned;

    bool ok() const noexcept { return failures.empty(); }
};

const std::vector<std::string>& law_suite_names();

/// Throws input_error for an unknown suite name.
LawReport run_law_suite(std::string_view name, std::uint64_t seed, std::size_t trials);

} // namespace residua
