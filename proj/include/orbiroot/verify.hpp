#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orbiroot/inertia_rr.hpp"

namespace orbiroot {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

struct SelftestOptions {
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    double tolerance = kDefaultTolerance;
};

/// Cross-checks every pair of independent routes in the library on seeded
/// random and small exhaustive inputs. Deterministic for a fixed seed.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

}  // namespace orbiroot
