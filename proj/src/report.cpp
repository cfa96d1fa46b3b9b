#include "pfh/report.hpp"

#include <json.hpp>

namespace pfh {

std::string Report::to_json() const {
    nlohmann::json j;
    j["title"] = title;
    j["pass"] = all_pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["check"] = c.name;
        jc["max_error"] = c.max_error;
        jc["tol"] = c.tol;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    return j.dump(2);
}

}  // namespace pfh
