#ifndef QGC_REPORT_HPP
#define QGC_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace qgc {

struct CheckResult {
    std::string identity;
    bool pass = false;
    std::string witness; // present iff pass == false
};

// Machine-readable outcome of one verification suite.
struct VerificationReport {
    std::string suite;
    std::map<std::string, std::string> parameters;
    std::vector<CheckResult> results;
    double elapsed_sec = 0.0;

    bool overall() const {
        for (auto& r : results)
            if (!r.pass) return false;
        return true;
    }

    void add(const std::string& identity, bool pass, const std::string& witness = "") {
        results.push_back({identity, pass, pass ? "" : witness});
    }

    void merge(const VerificationReport& other, const std::string& prefix = "");

    std::string to_json(bool include_elapsed = true) const;
    std::string summary_lines() const;
};

} // namespace qgc

#endif
