#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace extscan {

std::string sha256_hex(std::string_view bytes);

// Incremental hasher for large entries.
class Sha256 {
  public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(std::string_view bytes);
    std::string hex_digest();

  private:
    void* ctx_;
};

std::string to_lower(std::string_view text);
std::string trim(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);
// Splits on `sep`, trims each piece, drops empties.
std::vector<std::string> split_list(std::string_view text, char sep = ',');

bool starts_with(std::string_view text, std::string_view prefix);
bool ends_with(std::string_view text, std::string_view suffix);

std::optional<uint64_t> parse_u64(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);
// Writes to a sibling temp file then renames into place.
void write_file_atomic(const std::string& path, std::string_view bytes);

bool is_ipv4_literal(std::string_view host);
bool is_ipv6_literal(std::string_view host);
// Loopback, RFC1918, link-local, unique-local, "localhost" and *.local names.
bool is_local_or_private_host(std::string_view host);

} // namespace extscan
