#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "eatxt/diagnostics.hpp"
#include "eatxt/model.hpp"

namespace eatxt {

// EAXML interchange format. Line 1 carries the XML declaration; line 2 opens
// the root element and its xmlns encodes the schema version:
//
//   <?xml version="1.0" encoding="UTF-8"?>
//   <EAXML xmlns="http://east-adl.info/2.2">
//     <TOP-LEVEL-PACKAGES>
//       <EA-PACKAGE>
//         <SHORT-NAME>P</SHORT-NAME>
//         ...
//
// Children are grouped under fixed container tags (SUB-PACKAGES, ELEMENTS,
// PORTS, PARTS, CONNECTORS), attributes appear as leaf tags before the child
// containers, and empty containers are omitted. Serialization is
// deterministic with 2-space indentation.

inline constexpr std::string_view kXmlnsPrefix = "http://east-adl.info/";

struct VersionDetectResult {
    std::optional<SchemaVersion> version;
    std::vector<Diagnostic> diagnostics;
};

/// Extracts the schema version from the xmlns field. Reads only the first
/// two lines of the document; anything else yields E005.
VersionDetectResult detect_version(std::string_view xml);

struct SerializeResult {
    std::string text;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Serializes a validation-clean model. Textual references are resolved and
/// rewritten as absolute slash paths; an unresolvable reference refuses the
/// whole serialization with E003.
SerializeResult to_eaxml(const Model& model);

struct LoadResult {
    Model model;
    SchemaVersion version;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Single-pass deserializer. The declared version always wins for parsing;
/// when `expected` differs an E005 is reported and the model is still
/// returned tagged with its detected version. Absolute reference paths are
/// rewritten to the shortest textual form that resolves to the same element.
LoadResult from_eaxml(std::string_view xml, std::optional<SchemaVersion> expected = {});

} // namespace eatxt
