// Shared pass/fail report structure for the numerical verification routines
// and the self-check suite.
#pragma once

#include <string>
#include <vector>

namespace pfh {

struct Check {
    std::string name;
    double max_error = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string detail;  // optional counters or failure context
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, double max_error, double tol, std::string detail = {}) {
        checks.push_back({std::move(name), max_error, tol, max_error <= tol,
                          std::move(detail)});
    }
    void add_flag(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass ? 0.0 : 1.0, 0.0, pass,
                          std::move(detail)});
    }

    std::string to_json() const;
};

}  // namespace pfh
