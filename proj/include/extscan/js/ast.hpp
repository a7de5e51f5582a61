#pragma once

#include "extscan/js/lexer.hpp"

#include <string>
#include <vector>

namespace extscan::js {

// Normalized expression node. The parser flattens whole files into a list
// of these; rule evaluation never needs full statement structure.
struct Expr {
    enum class Kind {
        Identifier,
        String,   // cooked value; `folded` when built from concatenation
        Number,
        Bool,
        NullLit,
        MemberAccess, // children[0] = base, `name` = member (empty if dynamic)
        Call,         // children[0] = callee, children[1..] = args
        ObjectLiteral, // children are Property nodes
        Property,      // `name` = key, children[0] = value (absent for spread)
        ArrayLiteral,
        Assignment, // children[0] = target, children[1] = value
        Template,   // fragments + children = embedded expressions
        Unknown,    // anything else; children still visited
    };

    Kind kind = Kind::Unknown;
    Pos pos;
    std::string name;              // identifier / member / property key
    std::string str_value;         // String value (cooked, possibly folded)
    std::string num_text;          // Number lexeme
    bool bool_value = false;
    bool folded = false;           // String assembled from '+' folding
    bool computed_member = false;  // member came from ['literal']
    std::vector<std::string> fragments; // Template literal fragments
    std::vector<Expr> children;
};

struct ImportLike {
    std::string module;                   // e.g. "vscode", "http", "axios"
    std::string namespace_binding;        // `import * as X` / default / require target
    std::vector<std::pair<std::string, std::string>> named; // local -> exported
    Pos pos;
};

struct SyntaxTree {
    std::string path;
    std::vector<ImportLike> imports;
    std::vector<Expr> statements; // flattened across blocks and function bodies
    std::string source;           // decoded text (backs evidence extraction)
    size_t node_count = 0;
    bool parse_fallback = false; // structural parse failed; token scan applies
    bool lossy_decode = false;   // input was not valid UTF-8
};

} // namespace extscan::js
