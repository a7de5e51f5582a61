#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace extscan {

enum class Severity { Info, Low, Medium, High, Critical };

enum class Category { MaliciousIndicator, Vulnerable, Privacy, MarketMisuse, Hygiene };

const char* severity_name(Severity s);
const char* category_name(Category c);
std::optional<Severity> severity_from_name(const std::string& name);
std::optional<Category> category_from_name(const std::string& name);

struct ExtensionIdentity {
    std::string publisher; // lowercase marketplace publisher id
    std::string name;
    std::string version;

    std::string id() const { return publisher + "." + name; }
    bool operator==(const ExtensionIdentity&) const = default;
    auto operator<=>(const ExtensionIdentity&) const = default;
};

struct SourceLocation {
    std::string path;
    uint32_t line = 0;   // 1-based
    uint32_t column = 0; // 1-based

    bool operator==(const SourceLocation&) const = default;
    auto operator<=>(const SourceLocation&) const = default;
};

struct Finding {
    std::string rule_id;
    Category category = Category::Hygiene;
    Severity severity = Severity::Info;
    ExtensionIdentity subject;
    std::optional<SourceLocation> location;
    std::string evidence; // quotes the triggering value, never empty
    std::map<std::string, std::string> metadata;

    bool operator==(const Finding&) const = default;
};

// Ordering used everywhere findings are emitted: rule id, then location,
// then evidence.
bool finding_less(const Finding& a, const Finding& b);
void sort_findings(std::vector<Finding>& findings);

// The closed rule catalog. categorize() refuses ids outside it.
struct RuleInfo {
    std::string rule_id;
    Category category;
    Severity default_severity;
    std::string summary;
};

const std::vector<RuleInfo>& rule_catalog();
const RuleInfo* find_rule(const std::string& rule_id); // nullptr if unknown

// Convenience constructor that pulls category/severity from the catalog.
Finding make_finding(const std::string& rule_id, const ExtensionIdentity& subject,
                     std::string evidence, std::optional<SourceLocation> location = std::nullopt);

namespace rules {

// package-reader layer
inline constexpr const char* kPkgIdMismatch = "PKG-ID-MISMATCH";
inline constexpr const char* kPkgDupEntry = "PKG-DUP-ENTRY";
inline constexpr const char* kPkgEntryUnreadable = "PKG-ENTRY-UNREADABLE";

// manifest-analyzer
inline constexpr const char* kManPackInstall = "MAN-PACK-INSTALL";
inline constexpr const char* kManDepInstall = "MAN-DEP-INSTALL";
inline constexpr const char* kManUntrustedWs = "MAN-UNTRUSTED-WS";
inline constexpr const char* kManUntrustedWsLimited = "MAN-UNTRUSTED-WS-LIMITED";
inline constexpr const char* kManNoRepo = "MAN-NO-REPO";
inline constexpr const char* kManNetDep = "MAN-NET-DEP";
inline constexpr const char* kManOversized = "MAN-OVERSIZED";
inline constexpr const char* kManBundledBinary = "MAN-BUNDLED-BINARY";
inline constexpr const char* kManBundledModules = "MAN-BUNDLED-MODULES";

// source-scanner structural patterns
inline constexpr const char* kSrcTlsDisable = "SRC-TLS-DISABLE";
inline constexpr const char* kSrcSilentInstall = "SRC-SILENT-INSTALL";
inline constexpr const char* kSrcSilentInstallMaybe = "SRC-SILENT-INSTALL-MAYBE";
inline constexpr const char* kSrcHiddenTerminal = "SRC-HIDDEN-TERMINAL";
inline constexpr const char* kSrcCriticalFile = "SRC-CRITICAL-FILE";
inline constexpr const char* kSrcSettingsMutation = "SRC-SETTINGS-MUTATION";
inline constexpr const char* kSrcLocalProxy = "SRC-LOCAL-PROXY";
inline constexpr const char* kSrcNetCall = "SRC-NET-CALL";
inline constexpr const char* kSrcExtDirAccess = "SRC-EXT-DIR-ACCESS";

// source-scanner API watchlist
inline constexpr const char* kSrcApiWorkspaceFs = "SRC-API-WORKSPACE-FS";
inline constexpr const char* kSrcApiFsWatcher = "SRC-API-FS-WATCHER";
inline constexpr const char* kSrcApiApplyEdit = "SRC-API-APPLY-EDIT";
inline constexpr const char* kSrcApiFindFiles = "SRC-API-FIND-FILES";
inline constexpr const char* kSrcApiActiveEditor = "SRC-API-ACTIVE-EDITOR";
inline constexpr const char* kSrcApiCreateTerminal = "SRC-API-CREATE-TERMINAL";
inline constexpr const char* kSrcApiWebviewPanel = "SRC-API-WEBVIEW-PANEL";
inline constexpr const char* kSrcApiAuthSession = "SRC-API-AUTH-SESSION";
inline constexpr const char* kSrcApiGetExtension = "SRC-API-GET-EXTENSION";
inline constexpr const char* kSrcApiOpenExternal = "SRC-API-OPEN-EXTERNAL";
inline constexpr const char* kSrcApiClipboard = "SRC-API-CLIPBOARD";
inline constexpr const char* kSrcApiEnvIdentity = "SRC-API-ENV-IDENTITY";

// source-scanner bookkeeping
inline constexpr const char* kSrcUnparseable = "SRC-UNPARSEABLE";
inline constexpr const char* kSrcSkipped = "SRC-SKIPPED";
inline constexpr const char* kSrcEncoding = "SRC-ENCODING";

// dependency-auditor
inline constexpr const char* kDepCve = "DEP-CVE";
inline constexpr const char* kDepRangeUnparseable = "DEP-RANGE-UNPARSEABLE";

// corpus-graph hygiene
inline constexpr const char* kGraphSelfEdge = "GRAPH-SELF-EDGE";
inline constexpr const char* kGraphBadTarget = "GRAPH-BAD-TARGET";

} // namespace rules

} // namespace extscan
