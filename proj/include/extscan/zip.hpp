#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace extscan {

struct ZipEntry {
    std::string path;         // raw name as stored in the archive
    uint64_t compressed_size = 0;
    uint64_t uncompressed_size = 0;
    uint16_t method = 0;      // 0 = stored, 8 = deflate
    uint32_t crc32 = 0;
    uint64_t local_header_offset = 0;
    bool is_dir = false;
    bool encrypted = false;
};

// Collapses '.' and '..' segments and normalizes separators. Throws
// ScanError(PathTraversal) when the path escapes the archive root
// (leading '/', drive letter, or '..' past the top).
std::string normalize_archive_path(std::string_view raw);

// Read-only view over an in-memory ZIP container. Supports stored and
// DEFLATE entries plus the zip64 size/offset extensions.
class ZipReader {
  public:
    explicit ZipReader(std::string bytes); // throws ScanError(NotAZip)

    static bool looks_like_zip(std::string_view bytes);

    const std::vector<ZipEntry>& entries() const { return entries_; }
    const std::string& bytes() const { return buf_; }

    // Decompresses at most max_bytes of the entry. Truncating the output is
    // how callers bound decompression of hostile archives.
    std::string read(const ZipEntry& entry,
                     uint64_t max_bytes = std::numeric_limits<uint64_t>::max()) const;

  private:
    void parse_central_directory();

    std::string buf_;
    std::vector<ZipEntry> entries_;
};

} // namespace extscan
