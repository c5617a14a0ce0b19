#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace eatxt {

/// 1-based source position; length is in bytes. CRLF counts as one line break.
struct Span {
    int line = 1;
    int column = 1;
    int length = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

enum class Severity { Error, Warning };

/// Stable diagnostic codes asserted by tests and documented in the README.
namespace diag {
inline constexpr std::string_view syntax = "E001";
inline constexpr std::string_view unknown_keyword = "E002";
inline constexpr std::string_view unresolved_reference = "E003";
inline constexpr std::string_view duplicate_sibling_name = "E004";
inline constexpr std::string_view schema_version_mismatch = "E005";
inline constexpr std::string_view illegal_for_version = "E006";
inline constexpr std::string_view attribute_dropped = "W101";
inline constexpr std::string_view direction_mismatch = "W102";
} // namespace diag

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    Span span;
    std::string message;
    std::string hint; // empty means no hint

    static Diagnostic error(std::string_view code, Span span, std::string message,
                            std::string hint = {});
    static Diagnostic warning(std::string_view code, Span span, std::string message,
                              std::string hint = {});
};

/// Renders "path:line:col: severity[code]: message" plus an optional "  hint: ..." line.
std::string render(const Diagnostic& d, std::string_view path);

/// Stable sort by (line, column); ties keep emission order.
void sort_by_span(std::vector<Diagnostic>& diagnostics);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Appends `extra` to `into`.
void append(std::vector<Diagnostic>& into, std::vector<Diagnostic> extra);

} // namespace eatxt
