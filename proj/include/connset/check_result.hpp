#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace connset {

enum class CheckStatus { pass, fail, not_applicable };

inline const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

// Outcome of one statement on one graph (and one parameter, when the
// statement is parameterized). Failures carry a witness sufficient to
// reproduce the check: the graph6 record, the parameter, and the values.
struct CheckResult {
    std::string statement;
    std::int64_t graph_index = -1;
    std::string graph6;
    std::string param;
    CheckStatus status = CheckStatus::not_applicable;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["statement"] = statement;
        j["graph_index"] = graph_index;
        j["graph6"] = graph6;
        if (!param.empty()) j["param"] = param;
        j["status"] = check_status_name(status);
        j["witness"] = witness;
        return j;
    }
};

}  // namespace connset
