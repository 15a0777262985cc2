#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace su21 {


enum class CheckStatus { pass, fail, skipped, unverifiable };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::unverifiable: return "unverifiable";
    }
    return "?";
}

struct CheckResult {
    std::string case_id;
    std::string check_name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    std::string anchor;
};

struct Report {
    std::vector<CheckResult> results;
    int n_pass = 0, n_fail = 0, n_skipped = 0, n_unverifiable = 0;

    void add(CheckResult r) {
        switch (r.status) {
            case CheckStatus::pass: ++n_pass; break;
            case CheckStatus::fail: ++n_fail; break;
            case CheckStatus::skipped: ++n_skipped; break;
            case CheckStatus::unverifiable: ++n_unverifiable; break;
        }
        results.push_back(std::move(r));
    }

    void add(std::string case_id, std::string check_name, bool ok, std::string detail,
             std::string anchor) {
        add(CheckResult{std::move(case_id), std::move(check_name),
                        ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail),
                        std::move(anchor)});
    }

    /// Deterministic order: by case id, then check name; exact duplicate rows
    /// (typically sample-independent assertions) collapse to one.
    void finalize() {
        std::stable_sort(results.begin(), results.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             if (a.case_id != b.case_id) return a.case_id < b.case_id;
                             return a.check_name < b.check_name;
                         });
        std::vector<CheckResult> out;
        for (auto& r : results) {
            if (!out.empty() && out.back().case_id == r.case_id &&
                out.back().check_name == r.check_name && out.back().detail == r.detail &&
                out.back().status == r.status) {
                switch (r.status) {
                    case CheckStatus::pass: --n_pass; break;
                    case CheckStatus::fail: --n_fail; break;
                    case CheckStatus::skipped: --n_skipped; break;
                    case CheckStatus::unverifiable: --n_unverifiable; break;
                }
                continue;
            }
            out.push_back(std::move(r));
        }
        results = std::move(out);
    }

    Json to_json() const {
        Json j;
        j["schema_version"] = kReportSchemaVersion;
        j["catalog_schema_version"] = kCatalogSchemaVersion;
        Json summary;
        summary["pass"] = n_pass;
        summary["fail"] = n_fail;
        summary["skipped"] = n_skipped;
        summary["unverifiable"] = n_unverifiable;
        j["summary"] = summary;
        Json rs = Json::array();
        for (const auto& r : results) {
            Json x;
            x["case_id"] = r.case_id;
            x["check_name"] = r.check_name;
            x["status"] = to_string(r.status);
            x["detail"] = r.detail;
            x["paper_anchor"] = r.anchor;
            rs.push_back(x);
        }
        j["results"] = rs;
        return j;
    }

    std::string text() const {
        std::string s;
        for (const auto& r : results) {
            s += "[" + to_string(r.status) + "] " + r.case_id + " :: " + r.check_name;
            if (!r.detail.empty()) s += " -- " + r.detail;
            s += "\n";
        }
        s += "summary: pass=" + std::to_string(n_pass) +
             " fail=" + std::to_string(n_fail) +
             " skipped=" + std::to_string(n_skipped) +
             " unverifiable=" + std::to_string(n_unverifiable) + "\n";
        return s;
    }
};

} // namespace su21
