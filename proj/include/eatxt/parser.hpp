#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eatxt/diagnostics.hpp"
#include "eatxt/model.hpp"

namespace eatxt {

// Grammar of the textual notation:
//
//   model     := element* ;
//   element   := KIND IDENT ( '{' (attribute | element)* '}' | ';' ) ;
//   attribute := ATTRNAME value ';' ;
//   value     := dotted-identifier | direction-literal ;
//
// Element bodies are brace-delimited, attributes end with ';', and
// `KIND IDENT ;` is a legal empty element. Comments run from // to the end
// of the line. Error recovery resynchronizes at the next ';' or '}'.

struct ParseResult {
    Model model;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Recursive-descent parse with recovery; always returns a best-effort model.
ParseResult parse(std::string_view source, SchemaVersion version);

/// The candidate with minimal Levenshtein distance, if that distance is <= 2
/// and unique; otherwise nothing.
std::optional<std::string> keyword_suggest(std::string_view word,
                                           std::span<const std::string_view> candidates);

} // namespace eatxt
