#include "extscan/manifest_rules.hpp"

#include "extscan/util.hpp"

#include <algorithm>
#include <sstream>

namespace extscan {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::ostringstream out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out << ", ";
        out << items[i];
    }
    return out.str();
}

Finding with_severity(Finding f, const Policy& policy) {
    f.severity = policy.rule_severity(f.rule_id, f.severity);
    return f;
}

} // namespace

std::vector<Finding> analyze_manifest(const ExtensionManifest& manifest, const Policy& policy) {
    std::vector<Finding> findings;
    const ExtensionIdentity& subject = manifest.identity;

    if (!manifest.extension_pack.empty()) {
        findings.push_back(make_finding(rules::kManPackInstall, subject,
                                        "extensionPack: [" + join(manifest.extension_pack) + "]"));
    }
    if (!manifest.extension_dependencies.empty()) {
        findings.push_back(
            make_finding(rules::kManDepInstall, subject,
                         "extensionDependencies: [" + join(manifest.extension_dependencies) + "]"));
    }
    if (manifest.untrusted_workspaces == UntrustedWorkspaces::True) {
        findings.push_back(make_finding(rules::kManUntrustedWs, subject,
                                        "capabilities.untrustedWorkspaces.supported = true"));
    } else if (manifest.untrusted_workspaces == UntrustedWorkspaces::Limited) {
        findings.push_back(make_finding(rules::kManUntrustedWsLimited, subject,
                                        "capabilities.untrustedWorkspaces.supported = limited"));
    }
    // An empty-string URL counts as absent.
    if (!manifest.repository_url || trim(*manifest.repository_url).empty()) {
        findings.push_back(make_finding(rules::kManNoRepo, subject, "repository field missing"));
    }
    for (const auto& pkg : policy.network_packages) {
        auto it = manifest.dependencies.find(pkg);
        if (it != manifest.dependencies.end()) {
            Finding f = make_finding(rules::kManNetDep, subject,
                                     "dependency \"" + it->first + "\": \"" + it->second + "\"");
            f.metadata["package"] = it->first;
            findings.push_back(std::move(f));
        }
    }

    for (auto& f : findings) f = with_severity(std::move(f), policy);
    sort_findings(findings);
    return findings;
}

std::vector<Finding> analyze_inventory(const ExtensionIdentity& subject,
                                       const PackageInventory& inventory, const Policy& policy) {
    std::vector<Finding> findings;

    if (inventory.total_size > policy.max_total_bytes) {
        Finding f = make_finding(rules::kManOversized, subject,
                                 "total size " + std::to_string(inventory.total_size) +
                                     " bytes exceeds " + std::to_string(policy.max_total_bytes));
        f.metadata["total_size"] = std::to_string(inventory.total_size);
        findings.push_back(std::move(f));
    }

    uint64_t module_bytes = 0;
    bool has_modules = false;
    for (const auto& entry : inventory.entries) {
        if (entry.kind == EntryKind::NativeExecutable || entry.kind == EntryKind::Archive) {
            Finding f = make_finding(rules::kManBundledBinary, subject,
                                     "bundled " + std::string(entry_kind_name(entry.kind)) +
                                         " \"" + entry.path + "\"");
            f.location = SourceLocation{entry.path, 0, 0};
            findings.push_back(std::move(f));
        }
        if (entry.kind == EntryKind::NodeModule) {
            has_modules = true;
            module_bytes += entry.size;
        }
    }
    if (has_modules && module_bytes > policy.max_node_modules_bytes) {
        Finding f = make_finding(rules::kManBundledModules, subject,
                                 "node_modules totals " + std::to_string(module_bytes) +
                                     " bytes, over " +
                                     std::to_string(policy.max_node_modules_bytes));
        f.metadata["node_modules_bytes"] = std::to_string(module_bytes);
        findings.push_back(std::move(f));
    }

    for (auto& f : findings) f.severity = policy.rule_severity(f.rule_id, f.severity);
    sort_findings(findings);
    return findings;
}

} // namespace extscan
