#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace dalg::suite {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Observation };

inline std::string to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Observation: return "observation";
    }
    return "?";
}

struct Check {
    std::string name;
    Status status = Status::Pass;
    json details = json::object();
};

/// One document per run: {run, checks:[{name, status, details}], counts}.
struct RunReport {
    std::string run;
    std::vector<Check> checks;
    json counts = json::object();

    void add(std::string name, bool ok, json details = json::object()) {
        checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(details)});
    }
    void observe(std::string name, json details) {
        checks.push_back({std::move(name), Status::Observation, std::move(details)});
    }
    bool ok() const {
        for (const auto& c : checks)
            if (c.status == Status::Fail) return false;
        return true;
    }
    void append(const RunReport& o) {
        for (auto c : o.checks) {
            c.name = o.run + ": " + c.name;
            checks.push_back(std::move(c));
        }
        for (const auto& [k, v] : o.counts.items()) counts[o.run + "." + k] = v;
    }

    json to_json() const {
        json j;
        j["run"] = run;
        j["checks"] = json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
        j["counts"] = counts;
        return j;
    }

    std::string to_text() const {
        std::string out = "run: " + run + "\n";
        for (const auto& c : checks) {
            out += "  [" + to_string(c.status) + "] " + c.name;
            if (!c.details.empty()) out += "  " + c.details.dump();
            out += "\n";
        }
        if (!counts.empty()) out += "  counts: " + counts.dump() + "\n";
        return out;
    }
};

}  // namespace dalg::suite
