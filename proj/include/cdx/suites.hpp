#pragma once

#include "cdx/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cdx {

/// Shared knobs for a verification run. `level` is the working level of the
/// suite's main objects; suites over doubled pairs document whether it means
/// the pair level or the half level.
struct RunConfig {
    int level = 4;
    std::uint64_t seed = 1;
    long samples = 100;
    std::string mode = "exact"; ///< "exact" or "float"; every suite is exact
    int support = 2;            ///< terms per side for certificate-backed suites
};

/// Registered suite names, in registry order.
std::vector<std::string> suite_names();

bool is_suite_name(const std::string& name);

/// Smallest level a suite accepts. Useful for filtering a run-everything
/// sweep; requesting a named suite below this is a configuration error.
int suite_min_level(const std::string& name);

/// Runs one registered suite. Throws std::invalid_argument for unknown
/// names, float mode, or a level below the suite's minimum.
Report run_suite(const std::string& name, const RunConfig& cfg);

} // namespace cdx
