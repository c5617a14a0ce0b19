#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eatxt/diagnostics.hpp"

namespace eatxt {

/// A registered metamodel version. Only the ids listed in `all()` can be
/// constructed; the total order follows the release order (2.1.12 < 2.2).
class SchemaVersion {
public:
    /// Defaults to the latest registered version.
    SchemaVersion();

    static std::optional<SchemaVersion> parse(std::string_view id);
    static SchemaVersion latest();
    static std::span<const SchemaVersion> all();
    /// Comma-separated list of registered ids, for diagnostics.
    static std::string registered_ids();

    std::string_view str() const;

    friend bool operator==(const SchemaVersion&, const SchemaVersion&) = default;
    friend auto operator<=>(const SchemaVersion&, const SchemaVersion&) = default;

private:
    explicit SchemaVersion(int ordinal) : ordinal_(ordinal) {}
    int ordinal_;
};

enum class ElementKind {
    EAPackage,
    DesignFunctionType,
    AnalysisFunctionType,
    HardwareComponentType,
    HardwareFunctionType,
    FunctionFlowPort,
    DesignFunctionPrototype,
    FunctionConnector,
};

inline constexpr int kElementKindCount = 8;

std::span<const ElementKind> all_kinds();

/// Textual keyword, e.g. DesignFunctionType.
std::string_view keyword_of(ElementKind kind);
/// EAXML tag, e.g. DESIGN-FUNCTION-TYPE. Bijective with keyword_of.
std::string_view xml_tag_of(ElementKind kind);
std::optional<ElementKind> kind_from_keyword(std::string_view word);
std::optional<ElementKind> kind_from_xml_tag(std::string_view tag);

bool is_identifier(std::string_view text);

/// A cross-reference path. Textual form is dot-separated and may be relative;
/// the EAXML form is slash-separated and always starts at a root.
struct QualifiedRef {
    std::vector<std::string> segments;
    bool absolute = false;

    static QualifiedRef from_text(std::string_view dotted);
    static std::optional<QualifiedRef> from_eaxml(std::string_view slashed);

    std::string text() const;
    std::string eaxml() const;

    friend bool operator==(const QualifiedRef&, const QualifiedRef&) = default;
};

/// Comments captured by the parser so the formatter can reattach them.
/// `leading` lines precede the statement; `trailing` sits on the same line
/// after it. Ignored by model_equal.
struct Comments {
    std::vector<std::string> leading;
    std::optional<std::string> trailing;

    bool empty() const { return leading.empty() && !trailing.has_value(); }
};

struct Attribute {
    std::string name;
    std::string value; // raw textual value: direction literal or dotted path
    Comments comments;
    std::optional<Span> name_span;
    std::optional<Span> value_span;
};

struct Element {
    ElementKind kind = ElementKind::EAPackage;
    std::string short_name;
    std::vector<Attribute> attributes; // declaration order preserved
    std::vector<Element> children;     // containment order preserved
    Comments comments;
    std::vector<std::string> end_comments; // comments just before the closing brace
    std::optional<Span> span;              // span of the introducing keyword

    const Attribute* find_attribute(std::string_view name) const;
    const Element* find_child(std::string_view short_name) const;
};

struct Model {
    std::vector<Element> roots;
    SchemaVersion version;
    std::vector<std::string> end_comments; // comments after the last root

    bool empty() const { return roots.empty(); }
};

/// Deep equality over kind, shortName, attributes and children. Attribute
/// order, spans and comments are ignored; child order is significant.
/// Reference-valued attributes compare by resolved target so that different
/// textual spellings of the same reference are equal; unresolved references
/// fall back to raw text comparison.
bool model_equal(const Model& a, const Model& b);

/// Number of elements in the containment tree.
std::size_t element_count(const Model& model);

} // namespace eatxt
