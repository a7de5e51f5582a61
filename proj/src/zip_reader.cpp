#include "extscan/zip.hpp"

#include "extscan/errors.hpp"
#include "extscan/util.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>

namespace extscan {

namespace {

constexpr uint32_t kEocdSig = 0x06054b50;
constexpr uint32_t kEocd64LocatorSig = 0x07064b50;
constexpr uint32_t kEocd64Sig = 0x06064b50;
constexpr uint32_t kCentralSig = 0x02014b50;
constexpr uint32_t kLocalSig = 0x04034b50;

uint16_t rd16(const std::string& b, size_t off) {
    return static_cast<uint16_t>(static_cast<unsigned char>(b[off]) |
                                 (static_cast<unsigned char>(b[off + 1]) << 8));
}

uint32_t rd32(const std::string& b, size_t off) {
    return static_cast<uint32_t>(static_cast<unsigned char>(b[off])) |
           (static_cast<uint32_t>(static_cast<unsigned char>(b[off + 1])) << 8) |
           (static_cast<uint32_t>(static_cast<unsigned char>(b[off + 2])) << 16) |
           (static_cast<uint32_t>(static_cast<unsigned char>(b[off + 3])) << 24);
}

uint64_t rd64(const std::string& b, size_t off) {
    return static_cast<uint64_t>(rd32(b, off)) | (static_cast<uint64_t>(rd32(b, off + 4)) << 32);
}

std::string inflate_raw(std::string_view compressed, uint64_t max_out) {
    z_stream strm{};
    if (inflateInit2(&strm, -MAX_WBITS) != Z_OK) {
        throw ScanError(Errc::IoError, "inflate init failed");
    }
    std::string out;
    std::vector<char> chunk(64 * 1024);
    strm.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
    strm.avail_in = static_cast<uInt>(compressed.size());
    int rc = Z_OK;
    while (rc != Z_STREAM_END && out.size() < max_out) {
        strm.next_out = reinterpret_cast<Bytef*>(chunk.data());
        strm.avail_out = static_cast<uInt>(chunk.size());
        rc = inflate(&strm, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END && rc != Z_BUF_ERROR) {
            inflateEnd(&strm);
            throw ScanError(Errc::IoError, "corrupt deflate stream");
        }
        size_t produced = chunk.size() - strm.avail_out;
        size_t keep = std::min<uint64_t>(produced, max_out - out.size());
        out.append(chunk.data(), keep);
        if (rc == Z_BUF_ERROR && produced == 0) break; // no progress; input exhausted
    }
    inflateEnd(&strm);
    return out;
}

} // namespace

std::string normalize_archive_path(std::string_view raw) {
    std::string unified(raw);
    std::replace(unified.begin(), unified.end(), '\\', '/');
    if (!unified.empty() && unified.front() == '/') {
        throw ScanError(Errc::PathTraversal, "absolute entry path: " + std::string(raw));
    }
    if (unified.size() >= 2 && unified[1] == ':') {
        throw ScanError(Errc::PathTraversal, "drive-rooted entry path: " + std::string(raw));
    }
    std::vector<std::string> stack;
    for (const auto& seg : split(unified, '/')) {
        if (seg.empty() || seg == ".") continue;
        if (seg == "..") {
            if (stack.empty()) {
                throw ScanError(Errc::PathTraversal, "entry escapes root: " + std::string(raw));
            }
            stack.pop_back();
            continue;
        }
        stack.push_back(seg);
    }
    std::string out;
    for (size_t i = 0; i < stack.size(); ++i) {
        if (i) out.push_back('/');
        out += stack[i];
    }
    if (ends_with(unified, "/") && !out.empty()) out.push_back('/');
    return out;
}

bool ZipReader::looks_like_zip(std::string_view bytes) {
    return bytes.size() >= 4 && bytes[0] == 'P' && bytes[1] == 'K' &&
           (bytes[2] == 3 || bytes[2] == 5 || bytes[2] == 7) &&
           (bytes[3] == 4 || bytes[3] == 6 || bytes[3] == 8);
}

ZipReader::ZipReader(std::string bytes) : buf_(std::move(bytes)) {
    if (!looks_like_zip(buf_)) {
        throw ScanError(Errc::NotAZip, "missing PK signature");
    }
    parse_central_directory();
}

void ZipReader::parse_central_directory() {
    // EOCD lives in the trailing 22..22+65535 bytes.
    if (buf_.size() < 22) throw ScanError(Errc::NotAZip, "too short for end record");
    size_t scan_floor = buf_.size() > 22 + 65535 ? buf_.size() - 22 - 65535 : 0;
    size_t eocd = std::string::npos;
    for (size_t pos = buf_.size() - 22; ; --pos) {
        if (rd32(buf_, pos) == kEocdSig) {
            eocd = pos;
            break;
        }
        if (pos == scan_floor) break;
    }
    if (eocd == std::string::npos) throw ScanError(Errc::NotAZip, "end of central directory not found");

    uint64_t entry_count = rd16(buf_, eocd + 10);
    uint64_t cd_offset = rd32(buf_, eocd + 16);

    // zip64: the locator sits directly before the EOCD.
    if ((entry_count == 0xFFFF || cd_offset == 0xFFFFFFFF) && eocd >= 20) {
        size_t locator = eocd - 20;
        if (rd32(buf_, locator) == kEocd64LocatorSig) {
            uint64_t eocd64 = rd64(buf_, locator + 8);
            if (eocd64 + 56 <= buf_.size() && rd32(buf_, eocd64) == kEocd64Sig) {
                entry_count = rd64(buf_, eocd64 + 32);
                cd_offset = rd64(buf_, eocd64 + 48);
            }
        }
    }

    size_t pos = cd_offset;
    for (uint64_t i = 0; i < entry_count; ++i) {
        if (pos + 46 > buf_.size() || rd32(buf_, pos) != kCentralSig) {
            throw ScanError(Errc::NotAZip, "corrupt central directory");
        }
        ZipEntry entry;
        uint16_t flags = rd16(buf_, pos + 8);
        entry.encrypted = (flags & 0x1) != 0;
        entry.method = rd16(buf_, pos + 10);
        entry.crc32 = rd32(buf_, pos + 16);
        entry.compressed_size = rd32(buf_, pos + 20);
        entry.uncompressed_size = rd32(buf_, pos + 24);
        uint16_t name_len = rd16(buf_, pos + 28);
        uint16_t extra_len = rd16(buf_, pos + 30);
        uint16_t comment_len = rd16(buf_, pos + 32);
        entry.local_header_offset = rd32(buf_, pos + 42);
        if (pos + 46 + name_len + extra_len + comment_len > buf_.size()) {
            throw ScanError(Errc::NotAZip, "truncated central directory entry");
        }
        entry.path = buf_.substr(pos + 46, name_len);

        // zip64 extra field carries the wide values in declaration order.
        size_t xoff = pos + 46 + name_len;
        size_t xend = xoff + extra_len;
        while (xoff + 4 <= xend) {
            uint16_t tag = rd16(buf_, xoff);
            uint16_t len = rd16(buf_, xoff + 2);
            if (tag == 0x0001 && xoff + 4 + len <= xend) {
                size_t f = xoff + 4;
                if (entry.uncompressed_size == 0xFFFFFFFF && f + 8 <= xoff + 4 + len) {
                    entry.uncompressed_size = rd64(buf_, f);
                    f += 8;
                }
                if (entry.compressed_size == 0xFFFFFFFF && f + 8 <= xoff + 4 + len) {
                    entry.compressed_size = rd64(buf_, f);
                    f += 8;
                }
                if (entry.local_header_offset == 0xFFFFFFFF && f + 8 <= xoff + 4 + len) {
                    entry.local_header_offset = rd64(buf_, f);
                }
            }
            xoff += 4 + static_cast<size_t>(len);
        }

        entry.is_dir = !entry.path.empty() && entry.path.back() == '/';
        entries_.push_back(std::move(entry));
        pos += 46 + static_cast<size_t>(name_len) + extra_len + comment_len;
    }
}

std::string ZipReader::read(const ZipEntry& entry, uint64_t max_bytes) const {
    if (entry.encrypted) {
        throw ScanError(Errc::IoError, "encrypted entry: " + entry.path);
    }
    size_t lh = entry.local_header_offset;
    if (lh + 30 > buf_.size() || rd32(buf_, lh) != kLocalSig) {
        throw ScanError(Errc::NotAZip, "bad local header for " + entry.path);
    }
    uint16_t name_len = rd16(buf_, lh + 26);
    uint16_t extra_len = rd16(buf_, lh + 28);
    size_t data = lh + 30 + name_len + extra_len;
    if (data > buf_.size() || data + entry.compressed_size > buf_.size()) {
        throw ScanError(Errc::NotAZip, "truncated entry data for " + entry.path);
    }
    std::string_view raw(buf_.data() + data, entry.compressed_size);

    if (entry.method == 0) {
        uint64_t take = std::min<uint64_t>(raw.size(), max_bytes);
        return std::string(raw.substr(0, take));
    }
    if (entry.method == 8) {
        uint64_t cap = std::min<uint64_t>(entry.uncompressed_size, max_bytes);
        return inflate_raw(raw, cap);
    }
    throw ScanError(Errc::IoError,
                    "unsupported compression method " + std::to_string(entry.method) + " for " +
                        entry.path);
}

} // namespace extscan
