#pragma once

#include <string>
#include <string_view>

#include "eatxt/diagnostics.hpp"
#include "eatxt/model.hpp"

namespace eatxt {

/// Canonical pretty-print: 4-space indentation, braces on the header line,
/// one attribute or child per line, attributes before children, empty
/// elements in short form `Kind Name;`, exactly one trailing newline.
std::string emit(const Model& model);

struct FormatResult {
    std::string text;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Parse-then-emit. If the parse reported errors the input is returned
/// unchanged together with the diagnostics; unparseable text is never
/// rewritten.
FormatResult format(std::string_view source, SchemaVersion version);

} // namespace eatxt
