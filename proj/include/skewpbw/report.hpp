#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace skewpbw {

/// Structured result of a CLI command, rendered as text or JSON.
struct Report {
    struct Check {
        std::string name;
        bool passed;
        std::string expected;
        std::string actual;
    };

    std::string command;
    std::string algebra;
    std::string field;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void add(std::string name, bool passed, std::string expected = "", std::string actual = "") {
        checks.push_back({std::move(name), passed, std::move(expected), std::move(actual)});
    }

    size_t passed() const {
        size_t n = 0;
        for (const auto &c : checks)
            n += c.passed;
        return n;
    }
    size_t failed() const { return checks.size() - passed(); }
    bool ok() const { return failed() == 0; }

    std::string text() const {
        std::string out;
        for (const auto &c : checks) {
            out += c.passed ? "[PASS] " : "[FAIL] ";
            out += c.name;
            if (!c.passed && !c.expected.empty())
                out += "\n       expected: " + c.expected + "\n       actual:   " + c.actual;
            out += "\n";
        }
        for (const auto &n : notes)
            out += "note: " + n + "\n";
        out += "summary: " + std::to_string(passed()) + " passed, " + std::to_string(failed()) +
               " failed\n";
        return out;
    }

    std::string json() const {
        nlohmann::json j;
        j["command"] = command;
        j["algebra"] = algebra;
        j["field"] = field;
        j["checks"] = nlohmann::json::array();
        for (const auto &c : checks) {
            nlohmann::json jc;
            jc["name"] = c.name;
            jc["status"] = c.passed ? "pass" : "fail";
            if (!c.expected.empty())
                jc["expected"] = c.expected;
            if (!c.actual.empty())
                jc["actual"] = c.actual;
            j["checks"].push_back(jc);
        }
        j["notes"] = notes;
        j["summary"] = {{"passed", passed()}, {"failed", failed()}};
        return j.dump(2);
    }
};

} // namespace skewpbw
