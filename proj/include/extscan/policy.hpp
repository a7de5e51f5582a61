#pragma once

#include "extscan/finding.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace extscan {

// Tunable knobs shared by the analyzers, loadable from a `key = value`
// policy file; see data/policy.default for the documented format.
struct Policy {
    // manifest-analyzer
    std::vector<std::string> network_packages = {"axios",      "node-fetch", "request", "got",
                                                 "superagent", "undici",     "ws"};
    uint64_t max_total_bytes = 100ull * 1024 * 1024;
    uint64_t max_node_modules_bytes = 20ull * 1024 * 1024;

    // package-reader
    uint64_t max_hash_bytes = 64ull * 1024 * 1024;

    // source-scanner
    uint64_t max_parse_bytes = 10ull * 1024 * 1024;
    std::vector<std::string> critical_paths = {
        ".ssh/",         "id_rsa",     "id_ed25519", ".aws/credentials",   ".config/gcloud",
        ".azure/",       ".kube/config", ".npmrc",   ".netrc",             ".docker/config.json"};

    // intel-client
    int vt_threshold = 4;
    uint64_t intel_ttl_seconds = 7ull * 24 * 3600;
    double intel_rate_per_minute = 240.0;

    // corpus-graph
    int chain_min_length = 3;
    uint64_t chain_path_cap = 1000000;

    // report scoring
    int weight_info = 1;
    int weight_low = 5;
    int weight_medium = 15;
    int weight_high = 30;
    int weight_critical = 50;
    int tier_suspicious = 15; // score >= this is suspicious
    int tier_high_risk = 50;  // score >= this is high-risk

    // per-rule severity overrides, e.g. "severity.SRC-NET-CALL = low"
    std::map<std::string, Severity> severity_overrides;

    int severity_weight(Severity s) const;
    Severity rule_severity(const std::string& rule_id, Severity fallback) const;

    // Merges assignments from `path` onto *this. Unknown keys are an error
    // (PolicyUnparseable) so typos do not silently relax a policy.
    void load(const std::string& path);
    void parse(const std::string& text, const std::string& origin);

    std::string serialize() const;
};

} // namespace extscan
