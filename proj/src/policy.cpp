#include "extscan/policy.hpp"

#include "extscan/errors.hpp"
#include "extscan/util.hpp"

#include <sstream>

namespace extscan {

int Policy::severity_weight(Severity s) const {
    switch (s) {
    case Severity::Info: return weight_info;
    case Severity::Low: return weight_low;
    case Severity::Medium: return weight_medium;
    case Severity::High: return weight_high;
    case Severity::Critical: return weight_critical;
    }
    return weight_info;
}

Severity Policy::rule_severity(const std::string& rule_id, Severity fallback) const {
    auto it = severity_overrides.find(rule_id);
    return it == severity_overrides.end() ? fallback : it->second;
}

void Policy::load(const std::string& path) {
    parse(read_file(path), path);
}

namespace {

uint64_t require_u64(const std::string& value, const std::string& key, const std::string& origin) {
    auto v = parse_u64(value);
    if (!v) {
        throw ScanError(Errc::PolicyUnparseable,
                        origin + ": value for " + key + " is not a number: " + value);
    }
    return *v;
}

} // namespace

void Policy::parse(const std::string& text, const std::string& origin) {
    int lineno = 0;
    for (const auto& raw_line : split(text, '\n')) {
        ++lineno;
        std::string line = trim(raw_line);
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ScanError(Errc::PolicyUnparseable,
                            origin + ":" + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "network_packages") {
            network_packages = split_list(value);
        } else if (key == "critical_paths") {
            critical_paths = split_list(value);
        } else if (key == "max_total_bytes") {
            max_total_bytes = require_u64(value, key, origin);
        } else if (key == "max_node_modules_bytes") {
            max_node_modules_bytes = require_u64(value, key, origin);
        } else if (key == "max_hash_bytes") {
            max_hash_bytes = require_u64(value, key, origin);
        } else if (key == "max_parse_bytes") {
            max_parse_bytes = require_u64(value, key, origin);
        } else if (key == "vt_threshold") {
            vt_threshold = static_cast<int>(require_u64(value, key, origin));
        } else if (key == "intel_ttl_seconds") {
            intel_ttl_seconds = require_u64(value, key, origin);
        } else if (key == "intel_rate_per_minute") {
            intel_rate_per_minute = std::stod(value);
        } else if (key == "chain_min_length") {
            chain_min_length = static_cast<int>(require_u64(value, key, origin));
        } else if (key == "chain_path_cap") {
            chain_path_cap = require_u64(value, key, origin);
        } else if (key == "weight_info") {
            weight_info = static_cast<int>(require_u64(value, key, origin));
        } else if (key == "weight_low") {
            weight_low = static_cast<int>(require_u64(value, key, origin));
        } else if (key == "weight_medium") {
            weight_medium = static_cast<int>(require_u64(value, key, origin));
        } else if (key == "weight_high") {
            weight_high = static_cast<int>(require_u64(value, key, origin));
        } else if (key == "weight_critical") {
            weight_critical = static_cast<int>(require_u64(value, key, origin));
        } else if (key == "tier_suspicious") {
            tier_suspicious = static_cast<int>(require_u64(value, key, origin));
        } else if (key == "tier_high_risk") {
            tier_high_risk = static_cast<int>(require_u64(value, key, origin));
        } else if (starts_with(key, "severity.")) {
            std::string rule_id = key.substr(9);
            if (!find_rule(rule_id)) {
                throw ScanError(Errc::PolicyUnparseable,
                                origin + ": unknown rule id in override: " + rule_id);
            }
            auto sev = severity_from_name(value);
            if (!sev) {
                throw ScanError(Errc::PolicyUnparseable,
                                origin + ": unknown severity: " + value);
            }
            severity_overrides[rule_id] = *sev;
        } else {
            throw ScanError(Errc::PolicyUnparseable, origin + ": unknown policy key: " + key);
        }
    }
}

std::string Policy::serialize() const {
    std::ostringstream out;
    out << "# extscan policy\n";
    out << "network_packages = ";
    for (size_t i = 0; i < network_packages.size(); ++i) {
        if (i) out << ", ";
        out << network_packages[i];
    }
    out << "\n";
    out << "critical_paths = ";
    for (size_t i = 0; i < critical_paths.size(); ++i) {
        if (i) out << ", ";
        out << critical_paths[i];
    }
    out << "\n";
    out << "max_total_bytes = " << max_total_bytes << "\n";
    out << "max_node_modules_bytes = " << max_node_modules_bytes << "\n";
    out << "max_hash_bytes = " << max_hash_bytes << "\n";
    out << "max_parse_bytes = " << max_parse_bytes << "\n";
    out << "vt_threshold = " << vt_threshold << "\n";
    out << "intel_ttl_seconds = " << intel_ttl_seconds << "\n";
    out << "intel_rate_per_minute = " << intel_rate_per_minute << "\n";
    out << "chain_min_length = " << chain_min_length << "\n";
    out << "chain_path_cap = " << chain_path_cap << "\n";
    out << "weight_info = " << weight_info << "\n";
    out << "weight_low = " << weight_low << "\n";
    out << "weight_medium = " << weight_medium << "\n";
    out << "weight_high = " << weight_high << "\n";
    out << "weight_critical = " << weight_critical << "\n";
    out << "tier_suspicious = " << tier_suspicious << "\n";
    out << "tier_high_risk = " << tier_high_risk << "\n";
    for (const auto& [rule, sev] : severity_overrides) {
        out << "severity." << rule << " = " << severity_name(sev) << "\n";
    }
    return out.str();
}

} // namespace extscan
