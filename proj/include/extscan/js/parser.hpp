#pragma once

#include "extscan/js/ast.hpp"
#include "extscan/policy.hpp"

#include <string_view>

namespace extscan::js {

// Builds the normalized tree for one source file. Never throws for any
// byte sequence: undecodable input is replaced lossily and structural
// failures set parse_fallback. Throws ScanError(FileTooLarge) only when
// the input exceeds policy.max_parse_bytes.
SyntaxTree parse_source(const std::string& path, std::string_view bytes, const Policy& policy);

// Counts nodes of every kind in the tree (statements, recursively).
size_t count_nodes(const SyntaxTree& tree);

} // namespace extscan::js
