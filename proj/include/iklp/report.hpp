#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "iklp/inequalities.hpp"

namespace iklp {

enum class CheckVerdict { Pass, Fail, Skipped, NotMatroidal };

std::string to_string(CheckVerdict v);

struct CheckItem {
    std::string name;
    CheckVerdict verdict = CheckVerdict::Pass;
    std::string detail;  // witness / reason, empty when none
};

/// Per-case record: input echo, computed coefficients, verdicts, witnesses.
struct CheckReport {
    nlohmann::ordered_json input;                // echo of the case parameters
    std::vector<std::string> coefficients;       // decimal strings, low to high
    std::vector<CheckItem> checks;
    std::int64_t timing_us = 0;

    bool any_fail() const;
    bool not_matroidal() const;
    bool all_pass() const;  // no Fail and no NotMatroidal

    /// Stable JSON form. Timing is emitted only on request so that scan
    /// output stays byte-identical across runs.
    nlohmann::ordered_json to_json(bool include_timing) const;
    static CheckReport from_json(const nlohmann::ordered_json& j);

    std::string to_text() const;
};

/// {"pass": bool, "witness_index": int|null, "witness_value": "p/q"|null}
nlohmann::ordered_json to_json(const WitnessVerdict& v);

}  // namespace iklp
