#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kpn/base.hpp"
#include "kpn/checks.hpp"
#include "kpn/smith.hpp"

namespace kpn {

// file formats:
//   base complex  {"vertices": N, "simplices": [[v0 < v1 < ...], ...]}
//                 (closed under faces on ingestion)
//   cochain       {"degree": k, "modulus": m | null,
//                  "values": [[[v0, ...], g], ...]}  (missing simplices are 0)
//   report        {"schema": "...", "job": {...}, "groups": [...], ...}

BaseComplex parse_base_complex(const nlohmann::json& j);
nlohmann::json emit_base_complex(const BaseComplex& K);

BaseCochain parse_cochain(const nlohmann::json& j, const BaseComplex& K);
nlohmann::json emit_cochain(const BaseCochain& c, const BaseComplex& K);

struct Report {
    std::string schema = "kpn-report/1";
    nlohmann::json job = nlohmann::json::object();
    std::vector<HomologyGroup> groups;
    std::vector<long long> normalized_ranks;  // empty unless an EM job
    std::optional<bool> cocycle_is_coboundary;
    std::vector<CheckResult> checks;
    double total_seconds = 0;

    bool operator==(const Report& o) const;
};

nlohmann::json emit_report(const Report& r);
Report parse_report(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace kpn
