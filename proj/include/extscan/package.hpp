#pragma once

#include "extscan/finding.hpp"
#include "extscan/policy.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace extscan {

enum class EntryKind {
    EcmascriptSource,
    Manifest,
    NodeModule,
    NativeExecutable,
    Archive,
    Media,
    Other,
};

const char* entry_kind_name(EntryKind kind);

enum class UntrustedWorkspaces { True, False, Limited, Absent };

const char* untrusted_workspaces_name(UntrustedWorkspaces v);

struct ExtensionManifest {
    ExtensionIdentity identity;
    std::optional<std::string> main;
    std::map<std::string, std::string> dependencies; // package -> verbatim range string
    std::vector<std::string> extension_pack;
    std::vector<std::string> extension_dependencies;
    UntrustedWorkspaces untrusted_workspaces = UntrustedWorkspaces::Absent;
    std::optional<std::string> repository_url;
    std::vector<std::string> activation_events;
    std::string raw; // exact manifest bytes; unknown fields survive verbatim

    bool operator==(const ExtensionManifest&) const = default;
};

struct InventoryEntry {
    std::string path; // archive-relative, normalized
    uint64_t size = 0;
    EntryKind kind = EntryKind::Other;
    std::string sha256;
    bool hash_truncated = false; // entry was larger than the hash cap

    bool operator==(const InventoryEntry&) const = default;
};

struct PackageInventory {
    std::vector<InventoryEntry> entries;
    uint64_t total_size = 0;
};

struct ExtensionPackage {
    ExtensionIdentity identity;
    ExtensionManifest manifest;
    PackageInventory inventory;
    std::string package_sha256;
    std::string manifest_path;
    std::vector<Finding> read_findings; // identity mismatch, duplicate entries, ...
};

// Deterministic kind assignment; magic bytes win over suffixes.
EntryKind classify_entry(std::string_view path, std::string_view head_bytes,
                         std::string_view manifest_path = "extension/package.json");

// Parses a manifest document. Absent keys become empty collections;
// throws ScanError(ManifestUnparseable) only for non-JSON input or a
// missing publisher/name.
ExtensionManifest parse_manifest(const std::string& json_text);

// Opens a .vsix (ZIP) held in memory and builds the full package view.
// Throws ScanError: NotAZip, ManifestMissing, ManifestUnparseable,
// PathTraversal.
ExtensionPackage read_package(std::string archive_bytes, const Policy& policy = Policy{});

} // namespace extscan
