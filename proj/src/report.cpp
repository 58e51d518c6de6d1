#include "qgc/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qgc {

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (auto& r : other.results)
        results.push_back({prefix.empty() ? r.identity : prefix + "/" + r.identity, r.pass, r.witness});
}

std::string VerificationReport::to_json(bool include_elapsed) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    nlohmann::ordered_json rs = nlohmann::ordered_json::array();
    for (auto& r : results) {
        nlohmann::ordered_json e;
        e["identity"] = r.identity;
        e["pass"] = r.pass;
        if (!r.pass) e["witness"] = r.witness;
        rs.push_back(e);
    }
    j["results"] = rs;
    if (include_elapsed) j["elapsed"] = elapsed_sec;
    j["overall"] = overall();
    return j.dump(2);
}

std::string VerificationReport::summary_lines() const {
    std::ostringstream os;
    for (auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.identity;
        if (!r.pass && !r.witness.empty()) os << "  [" << r.witness << "]";
        os << "\n";
    }
    return os.str();
}

} // namespace qgc
