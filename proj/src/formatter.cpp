#include "eatxt/formatter.hpp"

#include "eatxt/parser.hpp"

namespace eatxt {

namespace {

constexpr int kIndentWidth = 4;

void indent_to(std::string& out, int level) { out.append(kIndentWidth * level, ' '); }

void emit_comment_lines(std::string& out, const std::vector<std::string>& comments, int level) {
    for (const std::string& comment : comments) {
        indent_to(out, level);
        out += comment;
        out += '\n';
    }
}

void finish_line(std::string& out, const Comments& comments) {
    if (comments.trailing) {
        out += ' ';
        out += *comments.trailing;
    }
    out += '\n';
}

void emit_attribute(std::string& out, const Attribute& attr, int level) {
    emit_comment_lines(out, attr.comments.leading, level);
    indent_to(out, level);
    out += attr.name;
    out += ' ';
    out += attr.value;
    out += ';';
    finish_line(out, attr.comments);
}

void emit_element(std::string& out, const Element& element, int level) {
    emit_comment_lines(out, element.comments.leading, level);
    indent_to(out, level);
    out += keyword_of(element.kind);
    out += ' ';
    out += element.short_name;
    bool empty =
        element.attributes.empty() && element.children.empty() && element.end_comments.empty();
    if (empty) {
        out += ';';
        finish_line(out, element.comments);
        return;
    }
    out += " {";
    finish_line(out, element.comments);
    for (const Attribute& attr : element.attributes)
        emit_attribute(out, attr, level + 1);
    for (const Element& child : element.children)
        emit_element(out, child, level + 1);
    emit_comment_lines(out, element.end_comments, level + 1);
    indent_to(out, level);
    out += "}\n";
}

} // namespace

std::string emit(const Model& model) {
    std::string out;
    for (const Element& root : model.roots)
        emit_element(out, root, 0);
    emit_comment_lines(out, model.end_comments, 0);
    return out;
}

FormatResult format(std::string_view source, SchemaVersion version) {
    ParseResult parsed = parse(source, version);
    if (has_errors(parsed.diagnostics))
        return FormatResult{std::string(source), std::move(parsed.diagnostics)};
    return FormatResult{emit(parsed.model), std::move(parsed.diagnostics)};
}

} // namespace eatxt
