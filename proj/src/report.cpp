#include "iklp/report.hpp"

#include <sstream>

namespace iklp {

std::string to_string(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::Pass: return "PASS";
        case CheckVerdict::Fail: return "FAIL";
        case CheckVerdict::Skipped: return "SKIPPED";
        case CheckVerdict::NotMatroidal: return "NOT_MATROIDAL";
    }
    return "?";
}

namespace {
CheckVerdict verdict_from_string(const std::string& s) {
    if (s == "PASS") return CheckVerdict::Pass;
    if (s == "FAIL") return CheckVerdict::Fail;
    if (s == "SKIPPED") return CheckVerdict::Skipped;
    return CheckVerdict::NotMatroidal;
}
}  // namespace

bool CheckReport::any_fail() const {
    for (const auto& c : checks)
        if (c.verdict == CheckVerdict::Fail) return true;
    return false;
}

bool CheckReport::not_matroidal() const {
    for (const auto& c : checks)
        if (c.verdict == CheckVerdict::NotMatroidal) return true;
    return false;
}

bool CheckReport::all_pass() const { return !any_fail() && !not_matroidal(); }

nlohmann::ordered_json CheckReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["input"] = input;
    j["coefficients"] = coefficients;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["verdict"] = to_string(c.verdict);
        if (c.detail.empty())
            cj["detail"] = nullptr;
        else
            cj["detail"] = c.detail;
        cs.push_back(std::move(cj));
    }
    j["checks"] = std::move(cs);
    if (include_timing) j["timing_us"] = timing_us;
    return j;
}

CheckReport CheckReport::from_json(const nlohmann::ordered_json& j) {
    CheckReport r;
    r.input = j.at("input");
    for (const auto& s : j.at("coefficients")) r.coefficients.push_back(s.get<std::string>());
    for (const auto& cj : j.at("checks")) {
        CheckItem item;
        item.name = cj.at("name").get<std::string>();
        item.verdict = verdict_from_string(cj.at("verdict").get<std::string>());
        if (!cj.at("detail").is_null()) item.detail = cj.at("detail").get<std::string>();
        r.checks.push_back(std::move(item));
    }
    if (j.contains("timing_us")) r.timing_us = j.at("timing_us").get<std::int64_t>();
    return r;
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << "input: " << input.dump() << "\n";
    os << "coefficients:";
    for (const auto& c : coefficients) os << " " << c;
    os << "\n";
    for (const auto& c : checks) {
        os << "  " << c.name << ": " << to_string(c.verdict);
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    if (timing_us > 0) os << "  elapsed: " << timing_us << " us\n";
    return os.str();
}

nlohmann::ordered_json to_json(const WitnessVerdict& v) {
    nlohmann::ordered_json j;
    j["pass"] = v.pass;
    j["witness_index"] =
        v.witness_index ? nlohmann::ordered_json(*v.witness_index) : nlohmann::ordered_json();
    j["witness_value"] =
        v.witness_value ? nlohmann::ordered_json(v.witness_value->str()) : nlohmann::ordered_json();
    return j;
}

}  // namespace iklp
