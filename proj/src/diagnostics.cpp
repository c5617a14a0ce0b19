#include "eatxt/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace eatxt {

Diagnostic Diagnostic::error(std::string_view code, Span span, std::string message,
                             std::string hint) {
    return Diagnostic{Severity::Error, std::string(code), span, std::move(message),
                      std::move(hint)};
}

Diagnostic Diagnostic::warning(std::string_view code, Span span, std::string message,
                               std::string hint) {
    return Diagnostic{Severity::Warning, std::string(code), span, std::move(message),
                      std::move(hint)};
}

std::string render(const Diagnostic& d, std::string_view path) {
    std::ostringstream out;
    out << path << ':' << d.span.line << ':' << d.span.column << ": "
        << (d.severity == Severity::Error ? "error" : "warning") << '[' << d.code
        << "]: " << d.message;
    if (!d.hint.empty())
        out << "\n  hint: " << d.hint;
    return out.str();
}

void sort_by_span(std::vector<Diagnostic>& diagnostics) {
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                         if (a.span.line != b.span.line)
                             return a.span.line < b.span.line;
                         return a.span.column < b.span.column;
                     });
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

void append(std::vector<Diagnostic>& into, std::vector<Diagnostic> extra) {
    into.insert(into.end(), std::make_move_iterator(extra.begin()),
                std::make_move_iterator(extra.end()));
}

} // namespace eatxt
