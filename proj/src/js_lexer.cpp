#include "extscan/js/lexer.hpp"

#include <array>
#include <cctype>
#include <set>
#include <string>

namespace extscan::js {

namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
           static_cast<unsigned char>(c) >= 0x80;
}

bool ident_part(char c) {
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

const std::set<std::string>& keywords() {
    static const std::set<std::string> kw = {
        "var",    "let",     "const",    "function", "class",   "if",      "else",
        "for",    "while",   "do",       "switch",   "case",    "default", "try",
        "catch",  "finally", "return",   "new",      "delete",  "typeof",  "instanceof",
        "in",     "of",      "this",     "null",     "true",    "false",   "undefined",
        "void",   "yield",   "async",    "await",    "import",  "export",  "from",
        "as",     "extends", "super",    "break",    "continue", "throw",  "with",
        "static", "get",     "set",      "debugger",
    };
    return kw;
}

// Longest-match punctuation, longest first.
const std::vector<std::string>& puncts() {
    static const std::vector<std::string> p = {
        ">>>=", "...", "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=", "??=",
        "=>",  "==",  "!=",  "<=",  ">=",  "&&",  "||",  "??",  "?.",  "**",  "++",
        "--",  "+=",  "-=",  "*=",  "/=",  "%=",  "&=",  "|=",  "^=",  "<<",  ">>",
        "{",   "}",   "(",   ")",   "[",   "]",   ";",   ",",   ".",   "<",   ">",
        "+",   "-",   "*",   "/",   "%",   "&",   "|",   "^",   "!",   "~",   "?",
        ":",   "=",   "@",   "#",
    };
    return p;
}

class Lexer {
  public:
    Lexer(std::string_view src, Pos start) : src_(src), pos_(start) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        if (src_.size() >= 2 && src_[0] == '#' && src_[1] == '!') skip_line();
        while (true) {
            skip_trivia();
            if (at_end()) break;
            out.push_back(next_token(out.empty() ? nullptr : &out.back()));
        }
        Token eof;
        eof.kind = TokKind::Eof;
        eof.pos = pos_;
        out.push_back(eof);
        return out;
    }

  private:
    bool at_end() const { return off_ >= src_.size(); }
    char peek(size_t ahead = 0) const {
        return off_ + ahead < src_.size() ? src_[off_ + ahead] : '\0';
    }

    char advance() {
        char c = src_[off_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    void skip_line() {
        while (!at_end() && peek() != '\n') advance();
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                skip_line();
            } else if (c == '/' && peek(1) == '*') {
                advance();
                advance();
                while (!at_end() && !(peek() == '*' && peek(1) == '/')) advance();
                if (at_end()) throw LexBailout{"unterminated block comment", pos_};
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    // Whether a '/' here begins a regex, judged from the previous token.
    bool regex_allowed(const Token* prev) const {
        if (!prev) return true;
        switch (prev->kind) {
        case TokKind::Identifier:
        case TokKind::Number:
        case TokKind::String:
        case TokKind::Template:
        case TokKind::Regex:
            return false;
        case TokKind::Keyword:
            // `this / 2` is division; everything else (`return /x/`) is regex.
            return prev->text != "this" && prev->text != "true" && prev->text != "false" &&
                   prev->text != "null" && prev->text != "undefined" && prev->text != "super";
        case TokKind::Punct:
            return prev->text != ")" && prev->text != "]" && prev->text != "++" &&
                   prev->text != "--";
        default:
            return true;
        }
    }

    Token next_token(const Token* prev) {
        Pos start = pos_;
        char c = peek();

        if (ident_start(c)) {
            std::string word;
            while (!at_end() && ident_part(peek())) word.push_back(advance());
            Token t;
            t.kind = keywords().count(word) ? TokKind::Keyword : TokKind::Identifier;
            t.text = std::move(word);
            t.pos = start;
            return t;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            return lex_number(start);
        }

        if (c == '"' || c == '\'') return lex_string(start);
        if (c == '`') return lex_template(start);
        if (c == '/' && regex_allowed(prev)) return lex_regex(start);

        for (const auto& p : puncts()) {
            if (src_.compare(off_, p.size(), p) == 0) {
                for (size_t i = 0; i < p.size(); ++i) advance();
                Token t;
                t.kind = TokKind::Punct;
                t.text = p;
                t.pos = start;
                return t;
            }
        }

        // Unknown byte: consume it so the lexer always makes progress.
        advance();
        Token t;
        t.kind = TokKind::Punct;
        t.text = std::string(1, c);
        t.pos = start;
        return t;
    }

    Token lex_number(Pos start) {
        std::string text;
        // Good-enough numeric scan; the exact value never matters beyond "0".
        while (!at_end()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
                text.push_back(advance());
                if ((text.back() == 'e' || text.back() == 'E') &&
                    text.size() > 1 && text[0] != '0' &&
                    (peek() == '+' || peek() == '-')) {
                    text.push_back(advance());
                }
            } else {
                break;
            }
        }
        Token t;
        t.kind = TokKind::Number;
        t.text = std::move(text);
        t.pos = start;
        return t;
    }

    std::string cook_escape() {
        // Called after the backslash was consumed.
        if (at_end()) throw LexBailout{"dangling escape", pos_};
        char e = advance();
        switch (e) {
        case 'n': return "\n";
        case 't': return "\t";
        case 'r': return "\r";
        case 'b': return "\b";
        case 'f': return "\f";
        case 'v': return "\v";
        case '0': return std::string(1, '\0');
        case 'x': {
            std::string hex;
            for (int i = 0; i < 2 && !at_end(); ++i) hex.push_back(advance());
            char value = static_cast<char>(std::strtol(hex.c_str(), nullptr, 16));
            return std::string(1, value);
        }
        case 'u': {
            std::string hex;
            if (peek() == '{') {
                advance();
                while (!at_end() && peek() != '}') hex.push_back(advance());
                if (!at_end()) advance();
            } else {
                for (int i = 0; i < 4 && !at_end(); ++i) hex.push_back(advance());
            }
            long cp = std::strtol(hex.c_str(), nullptr, 16);
            if (cp < 0x80) return std::string(1, static_cast<char>(cp));
            return "?"; // non-ASCII escapes are irrelevant to the rules
        }
        case '\n': return ""; // line continuation
        default: return std::string(1, e);
        }
    }

    Token lex_string(Pos start) {
        char quote = advance();
        std::string value;
        while (true) {
            if (at_end()) throw LexBailout{"unterminated string", start};
            char c = peek();
            if (c == '\n') throw LexBailout{"newline in string", pos_};
            advance();
            if (c == quote) break;
            if (c == '\\') {
                value += cook_escape();
            } else {
                value.push_back(c);
            }
        }
        Token t;
        t.kind = TokKind::String;
        t.text = std::move(value);
        t.pos = start;
        return t;
    }

    Token lex_template(Pos start) {
        advance(); // backtick
        Token t;
        t.kind = TokKind::Template;
        t.pos = start;
        std::string fragment;
        Pos frag_pos = pos_;
        auto flush = [&] {
            TemplatePart part;
            part.is_expr = false;
            part.text = std::move(fragment);
            part.pos = frag_pos;
            t.template_parts.push_back(std::move(part));
            fragment.clear();
        };
        while (true) {
            if (at_end()) throw LexBailout{"unterminated template", start};
            char c = peek();
            if (c == '`') {
                advance();
                flush();
                break;
            }
            if (c == '\\') {
                advance();
                fragment += cook_escape();
                continue;
            }
            if (c == '$' && peek(1) == '{') {
                flush();
                advance();
                advance();
                TemplatePart expr;
                expr.is_expr = true;
                expr.pos = pos_;
                expr.text = scan_balanced_expr(start);
                t.template_parts.push_back(std::move(expr));
                frag_pos = pos_;
                continue;
            }
            fragment.push_back(advance());
        }
        return t;
    }

    // Consumes up to the matching '}' of a template expression, tracking
    // nested strings/templates/braces. Returns the raw inner source.
    std::string scan_balanced_expr(Pos template_start) {
        std::string out;
        int depth = 1;
        while (true) {
            if (at_end()) throw LexBailout{"unterminated template expression", template_start};
            char c = peek();
            if (c == '{') ++depth;
            if (c == '}') {
                --depth;
                if (depth == 0) {
                    advance();
                    return out;
                }
            }
            if (c == '"' || c == '\'') {
                char quote = c;
                out.push_back(advance());
                while (true) {
                    if (at_end()) throw LexBailout{"unterminated string", pos_};
                    char s = advance();
                    out.push_back(s);
                    if (s == '\\' && !at_end()) {
                        out.push_back(advance());
                        continue;
                    }
                    if (s == quote) break;
                }
                continue;
            }
            if (c == '`') {
                // Nested template: keep it verbatim; the sub-parse lexes it.
                out.push_back(advance());
                int nested = 1;
                while (nested > 0) {
                    if (at_end()) throw LexBailout{"unterminated template", pos_};
                    char s = advance();
                    out.push_back(s);
                    if (s == '\\' && !at_end()) {
                        out.push_back(advance());
                    } else if (s == '`') {
                        --nested;
                    }
                }
                continue;
            }
            out.push_back(advance());
        }
    }

    Token lex_regex(Pos start) {
        std::string text;
        text.push_back(advance()); // '/'
        bool in_class = false;
        while (true) {
            if (at_end() || peek() == '\n') throw LexBailout{"unterminated regex", start};
            char c = advance();
            text.push_back(c);
            if (c == '\\') {
                if (at_end()) throw LexBailout{"unterminated regex", start};
                text.push_back(advance());
                continue;
            }
            if (c == '[') in_class = true;
            else if (c == ']') in_class = false;
            else if (c == '/' && !in_class) break;
        }
        while (!at_end() && ident_part(peek())) text.push_back(advance()); // flags
        Token t;
        t.kind = TokKind::Regex;
        t.text = std::move(text);
        t.pos = start;
        return t;
    }

    std::string_view src_;
    size_t off_ = 0;
    Pos pos_;
};

} // namespace

bool is_js_keyword(std::string_view word) {
    return keywords().count(std::string(word)) > 0;
}

std::vector<Token> lex(std::string_view source, Pos start) {
    return Lexer(source, start).run();
}

} // namespace extscan::js
