#include "extscan/util.hpp"

#include "extscan/errors.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace extscan {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::NotAZip: return "NotAZip";
    case Errc::ManifestMissing: return "ManifestMissing";
    case Errc::ManifestUnparseable: return "ManifestUnparseable";
    case Errc::PathTraversal: return "PathTraversal";
    case Errc::FileTooLarge: return "FileTooLarge";
    case Errc::VersionUnparseable: return "VersionUnparseable";
    case Errc::RangeUnparseable: return "RangeUnparseable";
    case Errc::DbUnparseable: return "DbUnparseable";
    case Errc::DuplicateRecord: return "DuplicateRecord";
    case Errc::BackendUnavailable: return "BackendUnavailable";
    case Errc::IndicatorInvalid: return "IndicatorInvalid";
    case Errc::RateLimited: return "RateLimited";
    case Errc::AllowlistUnreadable: return "AllowlistUnreadable";
    case Errc::EndpointUnavailable: return "EndpointUnavailable";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::NotFound: return "NotFound";
    case Errc::IntegrityMismatch: return "IntegrityMismatch";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::UnknownRuleId: return "UnknownRuleId";
    case Errc::PolicyUnparseable: return "PolicyUnparseable";
    case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

Sha256::Sha256() : ctx_(EVP_MD_CTX_new()) {
    EVP_DigestInit_ex(static_cast<EVP_MD_CTX*>(ctx_), EVP_sha256(), nullptr);
}

Sha256::~Sha256() {
    EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_));
}

void Sha256::update(std::string_view bytes) {
    EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), bytes.data(), bytes.size());
}

std::string Sha256::hex_digest() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), digest.data(), &len);
    static const char* hexdig = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hexdig[digest[i] >> 4]);
        out.push_back(hexdig[digest[i] & 0xf]);
    }
    return out;
}

std::string sha256_hex(std::string_view bytes) {
    Sha256 h;
    h.update(bytes);
    return h.hex_digest();
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view text) {
    size_t begin = 0;
    size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(text.substr(start));
            break;
        }
        out.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> split_list(std::string_view text, char sep) {
    std::vector<std::string> out;
    for (const auto& piece : split(text, sep)) {
        std::string t = trim(piece);
        if (!t.empty()) out.push_back(std::move(t));
    }
    return out;
}

bool starts_with(std::string_view text, std::string_view prefix) {
    return text.size() >= prefix.size() && text.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view text, std::string_view suffix) {
    return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
}

std::optional<uint64_t> parse_u64(std::string_view text) {
    uint64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScanError(Errc::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ScanError(Errc::IoError, "cannot write " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ScanError(Errc::IoError, "short write to " + path);
}

void write_file_atomic(const std::string& path, std::string_view bytes) {
    std::string tmp = path + ".tmp";
    write_file(tmp, bytes);
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ScanError(Errc::IoError, "cannot rename into " + path);
    }
}

bool is_ipv4_literal(std::string_view host) {
    auto parts = split(host, '.');
    if (parts.size() != 4) return false;
    for (const auto& part : parts) {
        if (part.empty() || part.size() > 3) return false;
        for (char c : part) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        auto v = parse_u64(part);
        if (!v || *v > 255) return false;
    }
    return true;
}

bool is_ipv6_literal(std::string_view host) {
    if (host.size() >= 2 && host.front() == '[' && host.back() == ']') {
        host = host.substr(1, host.size() - 2);
    }
    if (host.find(':') == std::string_view::npos) return false;
    for (char c : host) {
        if (!std::isxdigit(static_cast<unsigned char>(c)) && c != ':' && c != '.') return false;
    }
    return true;
}

bool is_local_or_private_host(std::string_view host) {
    std::string h = to_lower(trim(host));
    if (h.empty()) return true;
    if (h == "localhost" || ends_with(h, ".localhost") || ends_with(h, ".local")) return true;
    if (is_ipv4_literal(h)) {
        auto parts = split(h, '.');
        uint64_t a = *parse_u64(parts[0]);
        uint64_t b = *parse_u64(parts[1]);
        if (a == 127 || a == 10 || a == 0) return true;
        if (a == 192 && b == 168) return true;
        if (a == 172 && b >= 16 && b <= 31) return true;
        if (a == 169 && b == 254) return true;
        return false;
    }
    if (is_ipv6_literal(h)) {
        std::string bare = h;
        if (bare.front() == '[') bare = bare.substr(1, bare.size() - 2);
        if (bare == "::1" || bare == "::") return true;
        if (starts_with(bare, "fe8") || starts_with(bare, "fe9") || starts_with(bare, "fea") ||
            starts_with(bare, "feb"))
            return true;
        if (starts_with(bare, "fc") || starts_with(bare, "fd")) return true;
        return false;
    }
    return false;
}

} // namespace extscan
