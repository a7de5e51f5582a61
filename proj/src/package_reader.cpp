#include "extscan/package.hpp"

#include "extscan/errors.hpp"
#include "extscan/util.hpp"
#include "extscan/zip.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace extscan {

const char* entry_kind_name(EntryKind kind) {
    switch (kind) {
    case EntryKind::EcmascriptSource: return "ecmascript-source";
    case EntryKind::Manifest: return "manifest";
    case EntryKind::NodeModule: return "node-module";
    case EntryKind::NativeExecutable: return "native-executable";
    case EntryKind::Archive: return "archive";
    case EntryKind::Media: return "media";
    case EntryKind::Other: return "other";
    }
    return "other";
}

const char* untrusted_workspaces_name(UntrustedWorkspaces v) {
    switch (v) {
    case UntrustedWorkspaces::True: return "true";
    case UntrustedWorkspaces::False: return "false";
    case UntrustedWorkspaces::Limited: return "limited";
    case UntrustedWorkspaces::Absent: return "absent";
    }
    return "absent";
}

namespace {

bool has_suffix_ci(std::string_view path, std::string_view suffix) {
    if (path.size() < suffix.size()) return false;
    return to_lower(path.substr(path.size() - suffix.size())) == suffix;
}

bool magic_native(std::string_view head) {
    if (head.size() >= 2 && head[0] == 'M' && head[1] == 'Z') return true;
    if (head.size() >= 4 && head[0] == '\x7f' && head[1] == 'E' && head[2] == 'L' &&
        head[3] == 'F')
        return true;
    if (head.size() >= 4) {
        uint32_t m = (static_cast<uint32_t>(static_cast<unsigned char>(head[0])) << 24) |
                     (static_cast<uint32_t>(static_cast<unsigned char>(head[1])) << 16) |
                     (static_cast<uint32_t>(static_cast<unsigned char>(head[2])) << 8) |
                     static_cast<uint32_t>(static_cast<unsigned char>(head[3]));
        // Mach-O thin + fat, both endiannesses.
        if (m == 0xfeedface || m == 0xcefaedfe || m == 0xfeedfacf || m == 0xcffaedfe ||
            m == 0xcafebabe || m == 0xbebafeca)
            return true;
    }
    return false;
}

bool magic_archive(std::string_view head) {
    if (head.size() >= 4 && head[0] == 'P' && head[1] == 'K' && (head[2] == 3 || head[2] == 5) &&
        (head[3] == 4 || head[3] == 6))
        return true;
    if (head.size() >= 2 && static_cast<unsigned char>(head[0]) == 0x1f &&
        static_cast<unsigned char>(head[1]) == 0x8b)
        return true; // gzip
    return false;
}

const std::set<std::string>& media_suffixes() {
    static const std::set<std::string> s = {".png", ".jpg",  ".jpeg", ".gif", ".svg",  ".ico",
                                            ".webp", ".bmp", ".woff", ".woff2", ".ttf", ".otf",
                                            ".eot", ".mp3",  ".mp4",  ".wav", ".ogg"};
    return s;
}

std::string json_string(const nlohmann::json& obj, const char* key) {
    auto it = obj.find(key);
    if (it != obj.end() && it->is_string()) return it->get<std::string>();
    return {};
}

std::vector<std::string> json_string_array(const nlohmann::json& obj, const char* key) {
    std::vector<std::string> out;
    auto it = obj.find(key);
    if (it != obj.end() && it->is_array()) {
        for (const auto& item : *it) {
            if (item.is_string()) out.push_back(item.get<std::string>());
        }
    }
    return out;
}

// extension.vsixmanifest carries the marketplace-declared identity as XML
// attributes; a targeted attribute scan avoids pulling in an XML parser.
std::optional<ExtensionIdentity> scrape_vsixmanifest_identity(const std::string& xml) {
    auto attr = [&](const char* name) -> std::string {
        std::string needle = std::string(name) + "=\"";
        size_t pos = xml.find(needle);
        if (pos == std::string::npos) return {};
        size_t start = pos + needle.size();
        size_t end = xml.find('"', start);
        if (end == std::string::npos) return {};
        return xml.substr(start, end - start);
    };
    size_t identity_tag = xml.find("<Identity");
    if (identity_tag == std::string::npos) return std::nullopt;
    ExtensionIdentity id;
    id.publisher = to_lower(attr("Publisher"));
    id.name = to_lower(attr("Id"));
    id.version = attr("Version");
    if (id.publisher.empty() || id.name.empty()) return std::nullopt;
    return id;
}

} // namespace

EntryKind classify_entry(std::string_view path, std::string_view head_bytes,
                         std::string_view manifest_path) {
    if (magic_native(head_bytes)) return EntryKind::NativeExecutable;
    if (magic_archive(head_bytes)) return EntryKind::Archive;
    if (path == manifest_path) return EntryKind::Manifest;
    std::string lower = to_lower(path);
    if (lower.find("node_modules/") != std::string::npos) return EntryKind::NodeModule;
    if (has_suffix_ci(path, ".exe") || has_suffix_ci(path, ".dll") || has_suffix_ci(path, ".so") ||
        has_suffix_ci(path, ".dylib") || has_suffix_ci(path, ".node"))
        return EntryKind::NativeExecutable;
    if (has_suffix_ci(path, ".zip") || has_suffix_ci(path, ".jar") || has_suffix_ci(path, ".gz") ||
        has_suffix_ci(path, ".tgz") || has_suffix_ci(path, ".tar"))
        return EntryKind::Archive;
    if (has_suffix_ci(path, ".js") || has_suffix_ci(path, ".cjs") || has_suffix_ci(path, ".mjs"))
        return EntryKind::EcmascriptSource;
    size_t dot = lower.rfind('.');
    if (dot != std::string::npos && media_suffixes().count(lower.substr(dot)) > 0)
        return EntryKind::Media;
    return EntryKind::Other;
}

ExtensionManifest parse_manifest(const std::string& json_text) {
    nlohmann::json root = nlohmann::json::parse(json_text, nullptr, false);
    if (root.is_discarded() || !root.is_object()) {
        throw ScanError(Errc::ManifestUnparseable, "manifest is not a JSON object");
    }

    ExtensionManifest m;
    m.raw = json_text;

    m.identity.publisher = to_lower(json_string(root, "publisher"));
    m.identity.name = to_lower(json_string(root, "name"));
    m.identity.version = json_string(root, "version");
    if (m.identity.version.empty()) m.identity.version = "0.0.0";
    if (m.identity.publisher.empty() || m.identity.name.empty()) {
        throw ScanError(Errc::ManifestUnparseable, "manifest lacks publisher/name identity");
    }
    if (m.identity.publisher.find('/') != std::string::npos ||
        m.identity.name.find('/') != std::string::npos ||
        m.identity.publisher.find('\\') != std::string::npos ||
        m.identity.name.find('\\') != std::string::npos) {
        throw ScanError(Errc::ManifestUnparseable, "identity contains path separators");
    }

    std::string main = json_string(root, "main");
    if (!main.empty()) m.main = main;

    if (auto it = root.find("dependencies"); it != root.end() && it->is_object()) {
        for (auto dep = it->begin(); dep != it->end(); ++dep) {
            if (dep.value().is_string()) {
                m.dependencies[dep.key()] = dep.value().get<std::string>();
            }
        }
    }

    m.extension_pack = json_string_array(root, "extensionPack");
    m.extension_dependencies = json_string_array(root, "extensionDependencies");
    m.activation_events = json_string_array(root, "activationEvents");

    if (auto caps = root.find("capabilities"); caps != root.end() && caps->is_object()) {
        if (auto uw = caps->find("untrustedWorkspaces"); uw != caps->end() && uw->is_object()) {
            auto sup = uw->find("supported");
            if (sup != uw->end()) {
                // The field appears in the wild both as a bool and a string.
                if (sup->is_boolean()) {
                    m.untrusted_workspaces = sup->get<bool>() ? UntrustedWorkspaces::True
                                                              : UntrustedWorkspaces::False;
                } else if (sup->is_string()) {
                    std::string v = to_lower(sup->get<std::string>());
                    if (v == "true") m.untrusted_workspaces = UntrustedWorkspaces::True;
                    else if (v == "false") m.untrusted_workspaces = UntrustedWorkspaces::False;
                    else if (v == "limited") m.untrusted_workspaces = UntrustedWorkspaces::Limited;
                }
            }
        }
    }

    if (auto repo = root.find("repository"); repo != root.end()) {
        std::string url;
        if (repo->is_string()) url = repo->get<std::string>();
        else if (repo->is_object()) url = json_string(*repo, "url");
        if (!url.empty()) m.repository_url = url;
    }

    return m;
}

ExtensionPackage read_package(std::string archive_bytes, const Policy& policy) {
    ExtensionPackage pkg;
    pkg.package_sha256 = sha256_hex(archive_bytes);

    ZipReader zip(std::move(archive_bytes));

    struct NamedEntry {
        std::string path;
        const ZipEntry* entry;
    };
    std::vector<NamedEntry> files;
    for (const auto& entry : zip.entries()) {
        std::string normalized = normalize_archive_path(entry.path); // throws PathTraversal
        if (entry.is_dir || (normalized.empty() && entry.uncompressed_size == 0)) continue;
        files.push_back({std::move(normalized), &entry});
    }
    std::sort(files.begin(), files.end(),
              [](const NamedEntry& a, const NamedEntry& b) { return a.path < b.path; });

    // Locate the manifest: the conventional path first, then any
    // single-directory package.json.
    std::string manifest_path;
    for (const auto& f : files) {
        if (f.path == "extension/package.json") {
            manifest_path = f.path;
            break;
        }
    }
    if (manifest_path.empty()) {
        for (const auto& f : files) {
            auto segs = split(f.path, '/');
            if (segs.size() == 2 && segs[1] == "package.json") {
                manifest_path = f.path;
                break;
            }
        }
    }
    if (manifest_path.empty()) {
        throw ScanError(Errc::ManifestMissing, "no extension/package.json in archive");
    }
    pkg.manifest_path = manifest_path;

    std::set<std::string> seen;
    for (const auto& f : files) {
        if (!seen.insert(f.path).second) {
            Finding dup = make_finding(rules::kPkgDupEntry, pkg.identity,
                                       "duplicate archive path \"" + f.path + "\"");
            pkg.read_findings.push_back(std::move(dup));
            continue;
        }
        InventoryEntry inv;
        inv.path = f.path;
        std::string content;
        bool readable = true;
        try {
            content = zip.read(*f.entry, policy.max_hash_bytes);
        } catch (const ScanError&) {
            readable = false;
        }
        if (readable) {
            inv.hash_truncated = f.entry->uncompressed_size > policy.max_hash_bytes;
            inv.size = inv.hash_truncated ? f.entry->uncompressed_size : content.size();
            inv.sha256 = sha256_hex(content);
            inv.kind = classify_entry(f.path, std::string_view(content).substr(0, 8), manifest_path);
        } else {
            inv.size = f.entry->uncompressed_size;
            inv.sha256 = "";
            inv.kind = classify_entry(f.path, "", manifest_path);
            pkg.read_findings.push_back(make_finding(
                rules::kPkgEntryUnreadable, pkg.identity, "unreadable entry \"" + f.path + "\""));
        }
        pkg.inventory.total_size += inv.size;
        pkg.inventory.entries.push_back(std::move(inv));

        if (f.path == manifest_path) {
            pkg.manifest = parse_manifest(content); // throws ManifestUnparseable
            pkg.identity = pkg.manifest.identity;
        }
    }

    // Fix up subjects recorded before the manifest was parsed.
    for (auto& finding : pkg.read_findings) finding.subject = pkg.identity;

    for (const auto& f : files) {
        if (f.path == "extension.vsixmanifest") {
            std::string xml;
            try {
                xml = zip.read(*f.entry, 1 << 20);
            } catch (const ScanError&) {
                break;
            }
            auto declared = scrape_vsixmanifest_identity(xml);
            if (declared && (declared->publisher != pkg.identity.publisher ||
                             declared->name != pkg.identity.name)) {
                Finding mismatch = make_finding(
                    rules::kPkgIdMismatch, pkg.identity,
                    "manifest says \"" + pkg.identity.id() + "\" but archive declares \"" +
                        declared->id() + "\"");
                pkg.read_findings.push_back(std::move(mismatch));
            }
            break;
        }
    }

    sort_findings(pkg.read_findings);
    return pkg;
}

} // namespace extscan
