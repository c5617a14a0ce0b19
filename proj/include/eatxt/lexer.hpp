#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eatxt/diagnostics.hpp"

namespace eatxt {

enum class TokenKind {
    Keyword,    // one of the element kind keywords
    Identifier, // reclassified to AttrName by the parser in attribute position
    AttrName,
    Punct, // one of { } ; .
    Eof,
};

struct CommentTrivia {
    std::string text; // includes the leading //, trailing whitespace stripped
    Span span;
};

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string text;
    Span span;
    std::size_t offset = 0; // byte offset of `text` in the source

    // Whitespace, comments and skipped bytes preceding this token, verbatim.
    // Concatenating leading_trivia + text over all tokens reproduces the
    // source exactly.
    std::string leading_trivia;
    std::vector<CommentTrivia> comments;

    bool is_punct(char c) const { return kind == TokenKind::Punct && text.size() == 1 && text[0] == c; }
};

struct LexResult {
    std::vector<Token> tokens; // always terminated by an Eof token
    std::vector<Diagnostic> diagnostics;
};

/// Splits UTF-8 source into tokens. `//` comments and whitespace become
/// trivia; unknown characters produce E001 and are skipped into trivia.
LexResult lex(std::string_view source);

/// Reassembles the original source byte-for-byte.
std::string detokenize(const std::vector<Token>& tokens);

} // namespace eatxt
