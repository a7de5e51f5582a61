#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace extscan::js {

struct Pos {
    uint32_t line = 1;   // 1-based
    uint32_t column = 1; // 1-based

    bool operator==(const Pos&) const = default;
};

enum class TokKind { Identifier, Keyword, String, Template, Number, Regex, Punct, Eof };

// One literal fragment or one embedded `${...}` expression of a template.
struct TemplatePart {
    bool is_expr = false;
    std::string text; // cooked fragment text, or the raw expression source
    Pos pos;
};

struct Token {
    TokKind kind = TokKind::Eof;
    std::string text; // identifier name / punct / cooked string value / number lexeme
    Pos pos;
    std::vector<TemplatePart> template_parts;
};

// Raised on unterminated strings/templates/regexes and pathological nesting;
// callers degrade to the token-level fallback scan.
struct LexBailout {
    std::string reason;
    Pos pos;
};

bool is_js_keyword(std::string_view word);

std::vector<Token> lex(std::string_view source, Pos start = {1, 1});

} // namespace extscan::js
