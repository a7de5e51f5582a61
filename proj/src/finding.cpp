#include "extscan/finding.hpp"

#include <algorithm>
#include <unordered_map>

namespace extscan {

const char* severity_name(Severity s) {
    switch (s) {
    case Severity::Info: return "info";
    case Severity::Low: return "low";
    case Severity::Medium: return "medium";
    case Severity::High: return "high";
    case Severity::Critical: return "critical";
    }
    return "info";
}

const char* category_name(Category c) {
    switch (c) {
    case Category::MaliciousIndicator: return "malicious-indicator";
    case Category::Vulnerable: return "vulnerable";
    case Category::Privacy: return "privacy";
    case Category::MarketMisuse: return "market-misuse";
    case Category::Hygiene: return "hygiene";
    }
    return "hygiene";
}

std::optional<Severity> severity_from_name(const std::string& name) {
    if (name == "info") return Severity::Info;
    if (name == "low") return Severity::Low;
    if (name == "medium") return Severity::Medium;
    if (name == "high") return Severity::High;
    if (name == "critical") return Severity::Critical;
    return std::nullopt;
}

std::optional<Category> category_from_name(const std::string& name) {
    if (name == "malicious-indicator") return Category::MaliciousIndicator;
    if (name == "vulnerable") return Category::Vulnerable;
    if (name == "privacy") return Category::Privacy;
    if (name == "market-misuse") return Category::MarketMisuse;
    if (name == "hygiene") return Category::Hygiene;
    return std::nullopt;
}

bool finding_less(const Finding& a, const Finding& b) {
    if (a.rule_id != b.rule_id) return a.rule_id < b.rule_id;
    SourceLocation la = a.location.value_or(SourceLocation{});
    SourceLocation lb = b.location.value_or(SourceLocation{});
    if (la != lb) return la < lb;
    return a.evidence < b.evidence;
}

void sort_findings(std::vector<Finding>& findings) {
    std::stable_sort(findings.begin(), findings.end(), finding_less);
}

const std::vector<RuleInfo>& rule_catalog() {
    using enum Category;
    using enum Severity;
    static const std::vector<RuleInfo> catalog = {
        {rules::kPkgIdMismatch, Hygiene, Low, "manifest identity disagrees with archive metadata"},
        {rules::kPkgDupEntry, Hygiene, Info, "archive declares the same path twice"},
        {rules::kPkgEntryUnreadable, Hygiene, Info, "archive entry could not be decompressed"},

        {rules::kManPackInstall, MaliciousIndicator, Medium,
         "extensionPack installs other extensions without consent"},
        {rules::kManDepInstall, MaliciousIndicator, Medium,
         "extensionDependencies installs other extensions without consent"},
        {rules::kManUntrustedWs, MaliciousIndicator, Medium,
         "opts in to running in restricted (untrusted) workspaces"},
        {rules::kManUntrustedWsLimited, MaliciousIndicator, Info,
         "declares limited support for untrusted workspaces"},
        {rules::kManNoRepo, MarketMisuse, Low, "published without a repository URL"},
        {rules::kManNetDep, Privacy, Info, "depends on a network-capable package"},
        {rules::kManOversized, MarketMisuse, Low, "package exceeds the total size threshold"},
        {rules::kManBundledBinary, MarketMisuse, Medium,
         "bundles a native executable or nested archive"},
        {rules::kManBundledModules, MarketMisuse, Low,
         "bundles node_modules beyond the size threshold"},

        {rules::kSrcTlsDisable, MaliciousIndicator, Critical,
         "disables TLS certificate validation for the whole process"},
        {rules::kSrcSilentInstall, MaliciousIndicator, High,
         "silently installs another extension via the command API"},
        {rules::kSrcSilentInstallMaybe, MaliciousIndicator, Medium,
         "executes a non-literal command id; may install extensions"},
        {rules::kSrcHiddenTerminal, MaliciousIndicator, High,
         "creates a terminal hidden from the user"},
        {rules::kSrcCriticalFile, MaliciousIndicator, Critical,
         "reads a credential-bearing file path"},
        {rules::kSrcSettingsMutation, MaliciousIndicator, Medium,
         "mutates editor settings programmatically"},
        {rules::kSrcLocalProxy, MaliciousIndicator, High, "starts a local server/proxy"},
        {rules::kSrcNetCall, Privacy, Info, "calls out through a network-capable package"},
        {rules::kSrcExtDirAccess, MaliciousIndicator, High,
         "references the installed-extensions directory"},

        {rules::kSrcApiWorkspaceFs, Privacy, Medium, "uses workspace.fs"},
        {rules::kSrcApiFsWatcher, Privacy, Medium, "uses workspace.createFileSystemWatcher"},
        {rules::kSrcApiApplyEdit, Privacy, Medium, "uses workspace.applyEdit"},
        {rules::kSrcApiFindFiles, Privacy, Medium, "uses workspace.findFiles"},
        {rules::kSrcApiActiveEditor, Privacy, Medium, "uses window.activeTextEditor"},
        {rules::kSrcApiCreateTerminal, Privacy, Medium, "uses window.createTerminal"},
        {rules::kSrcApiWebviewPanel, Privacy, Medium, "uses window.createWebviewPanel"},
        {rules::kSrcApiAuthSession, Privacy, Medium, "uses authentication.getSession"},
        {rules::kSrcApiGetExtension, Privacy, Medium, "uses extensions.getExtension"},
        {rules::kSrcApiOpenExternal, Privacy, Medium, "uses env.openExternal"},
        {rules::kSrcApiClipboard, Privacy, Medium, "uses env.clipboard"},
        {rules::kSrcApiEnvIdentity, Privacy, Medium,
         "reads machine/session identity from the env namespace"},

        {rules::kSrcUnparseable, Hygiene, Info, "source did not parse; token-level scan applied"},
        {rules::kSrcSkipped, Hygiene, Info, "source exceeded the parse size limit"},
        {rules::kSrcEncoding, Hygiene, Info, "source was not valid UTF-8; decoded lossily"},

        {rules::kDepCve, Vulnerable, Medium, "dependency matches a known vulnerability record"},
        {rules::kDepRangeUnparseable, Hygiene, Info, "dependency version range did not parse"},

        {rules::kGraphSelfEdge, Hygiene, Info, "extension declares an install edge to itself"},
        {rules::kGraphBadTarget, Hygiene, Info, "install target id is malformed"},
    };
    return catalog;
}

const RuleInfo* find_rule(const std::string& rule_id) {
    static const std::unordered_map<std::string, const RuleInfo*> index = [] {
        std::unordered_map<std::string, const RuleInfo*> m;
        for (const auto& rule : rule_catalog()) m.emplace(rule.rule_id, &rule);
        return m;
    }();
    auto it = index.find(rule_id);
    return it == index.end() ? nullptr : it->second;
}

Finding make_finding(const std::string& rule_id, const ExtensionIdentity& subject,
                     std::string evidence, std::optional<SourceLocation> location) {
    const RuleInfo* info = find_rule(rule_id);
    Finding f;
    f.rule_id = rule_id;
    if (info) {
        f.category = info->category;
        f.severity = info->default_severity;
    }
    f.subject = subject;
    f.location = std::move(location);
    f.evidence = std::move(evidence);
    if (f.evidence.empty()) f.evidence = rule_id; // evidence must never be empty
    return f;
}

} // namespace extscan
