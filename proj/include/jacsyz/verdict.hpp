#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace jacsyz {

enum class Status { pass, fail, not_applicable };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_applicable: return "not_applicable";
    }
    return "fail";
}

/// Outcome of one mechanical check, with the numbers it was decided on.
struct Verdict {
    std::string name;
    Status status = Status::not_applicable;
    nlohmann::json details = nlohmann::json::object();
    std::string note;

    bool failed() const { return status == Status::fail; }
    nlohmann::json to_json() const {
        nlohmann::json j = {{"name", name}, {"status", to_string(status)}, {"details", details}};
        if (!note.empty()) j["note"] = note;
        return j;
    }
};

inline Verdict make_verdict(std::string name, bool ok, nlohmann::json details = nlohmann::json::object(),
                            std::string note = {}) {
    return {std::move(name), ok ? Status::pass : Status::fail, std::move(details), std::move(note)};
}

inline Verdict not_applicable(std::string name, std::string why) {
    return {std::move(name), Status::not_applicable, nlohmann::json::object(), std::move(why)};
}

inline bool any_failed(const std::vector<Verdict>& vs) {
    for (const auto& v : vs)
        if (v.failed()) return true;
    return false;
}

}  // namespace jacsyz
