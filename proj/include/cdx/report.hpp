#pragma once

#include "cdx/json_io.hpp"

#include <deque>
#include <string>
#include <vector>

namespace cdx {

/// One verified statement: how many samples were pushed through it, whether
/// every one passed, and a replayable counterexample when one did not.
struct CheckResult {
    std::string name;
    long samples = 0;
    bool passed = true;
    ordered_json counterexample; ///< null unless failed; serialized inputs

    ordered_json to_json() const;
};

/// Outcome of a verification run. Serialization is deterministic: identical
/// (config, suite) inputs produce identical bytes, so no wall-clock data
/// belongs here.
struct Report {
    std::string suite;
    std::string anchor; ///< human label of the statement family being checked
    ordered_json config = ordered_json::object();
    std::vector<std::string> notes;
    // deque keeps references from add() valid while later checks are appended
    std::deque<CheckResult> checks;

    bool passed() const;

    CheckResult& add(const std::string& name);
    void note(const std::string& text);

    /// Folds a child report in, prefixing its check names.
    void absorb(const Report& child, const std::string& prefix);

    ordered_json to_json() const;
};

} // namespace cdx
