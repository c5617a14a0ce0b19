#include "eatxt/model.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

#include "eatxt/registry.hpp"
#include "eatxt/scoping.hpp"

namespace eatxt {

namespace {

constexpr std::string_view kVersionIds[] = {"2.1.12", "2.2"};
constexpr int kVersionCount = 2;

const std::array<SchemaVersion, kVersionCount>& version_table() {
    static const std::array<SchemaVersion, kVersionCount> table = {
        SchemaVersion::parse(kVersionIds[0]).value(),
        SchemaVersion::parse(kVersionIds[1]).value(),
    };
    return table;
}

struct KindRow {
    ElementKind kind;
    std::string_view keyword;
    std::string_view xml_tag;
};

constexpr KindRow kKindRows[] = {
    {ElementKind::EAPackage, "EAPackage", "EA-PACKAGE"},
    {ElementKind::DesignFunctionType, "DesignFunctionType", "DESIGN-FUNCTION-TYPE"},
    {ElementKind::AnalysisFunctionType, "AnalysisFunctionType", "ANALYSIS-FUNCTION-TYPE"},
    {ElementKind::HardwareComponentType, "HardwareComponentType", "HARDWARE-COMPONENT-TYPE"},
    {ElementKind::HardwareFunctionType, "HardwareFunctionType", "HARDWARE-FUNCTION-TYPE"},
    {ElementKind::FunctionFlowPort, "FunctionFlowPort", "FUNCTION-FLOW-PORT"},
    {ElementKind::DesignFunctionPrototype, "DesignFunctionPrototype", "DESIGN-FUNCTION-PROTOTYPE"},
    {ElementKind::FunctionConnector, "FunctionConnector", "FUNCTION-CONNECTOR"},
};

static_assert(std::size(kKindRows) == kElementKindCount);

constexpr ElementKind kAllKinds[] = {
    ElementKind::EAPackage,           ElementKind::DesignFunctionType,
    ElementKind::AnalysisFunctionType, ElementKind::HardwareComponentType,
    ElementKind::HardwareFunctionType, ElementKind::FunctionFlowPort,
    ElementKind::DesignFunctionPrototype, ElementKind::FunctionConnector,
};

} // namespace

SchemaVersion::SchemaVersion() : ordinal_(kVersionCount - 1) {}

std::optional<SchemaVersion> SchemaVersion::parse(std::string_view id) {
    for (int i = 0; i < kVersionCount; ++i)
        if (kVersionIds[i] == id)
            return SchemaVersion(i);
    return std::nullopt;
}

SchemaVersion SchemaVersion::latest() { return SchemaVersion(kVersionCount - 1); }

std::span<const SchemaVersion> SchemaVersion::all() { return version_table(); }

std::string SchemaVersion::registered_ids() {
    std::string out;
    for (int i = 0; i < kVersionCount; ++i) {
        if (i > 0)
            out += ", ";
        out += kVersionIds[i];
    }
    return out;
}

std::string_view SchemaVersion::str() const { return kVersionIds[ordinal_]; }

std::span<const ElementKind> all_kinds() { return kAllKinds; }

std::string_view keyword_of(ElementKind kind) {
    return kKindRows[static_cast<int>(kind)].keyword;
}

std::string_view xml_tag_of(ElementKind kind) {
    return kKindRows[static_cast<int>(kind)].xml_tag;
}

std::optional<ElementKind> kind_from_keyword(std::string_view word) {
    for (const KindRow& row : kKindRows)
        if (row.keyword == word)
            return row.kind;
    return std::nullopt;
}

std::optional<ElementKind> kind_from_xml_tag(std::string_view tag) {
    for (const KindRow& row : kKindRows)
        if (row.xml_tag == tag)
            return row.kind;
    return std::nullopt;
}

bool is_identifier(std::string_view text) {
    if (text.empty())
        return false;
    auto word_start = [](unsigned char c) { return std::isalpha(c) || c == '_'; };
    auto word_char = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
    if (!word_start(static_cast<unsigned char>(text[0])))
        return false;
    for (char c : text.substr(1))
        if (!word_char(static_cast<unsigned char>(c)))
            return false;
    return true;
}

QualifiedRef QualifiedRef::from_text(std::string_view dotted) {
    QualifiedRef ref;
    std::size_t start = 0;
    while (start <= dotted.size()) {
        std::size_t dot = dotted.find('.', start);
        if (dot == std::string_view::npos) {
            ref.segments.emplace_back(dotted.substr(start));
            break;
        }
        ref.segments.emplace_back(dotted.substr(start, dot - start));
        start = dot + 1;
    }
    return ref;
}

std::optional<QualifiedRef> QualifiedRef::from_eaxml(std::string_view slashed) {
    if (slashed.empty() || slashed[0] != '/')
        return std::nullopt;
    QualifiedRef ref;
    ref.absolute = true;
    std::size_t start = 1;
    while (start <= slashed.size()) {
        std::size_t slash = slashed.find('/', start);
        std::string_view segment = slash == std::string_view::npos
                                       ? slashed.substr(start)
                                       : slashed.substr(start, slash - start);
        if (!is_identifier(segment))
            return std::nullopt;
        ref.segments.emplace_back(segment);
        if (slash == std::string_view::npos)
            break;
        start = slash + 1;
    }
    return ref;
}

std::string QualifiedRef::text() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i > 0)
            out += '.';
        out += segments[i];
    }
    return out;
}

std::string QualifiedRef::eaxml() const {
    std::string out;
    for (const std::string& segment : segments) {
        out += '/';
        out += segment;
    }
    return out;
}

const Attribute* Element::find_attribute(std::string_view name) const {
    for (const Attribute& attr : attributes)
        if (attr.name == name)
            return &attr;
    return nullptr;
}

const Element* Element::find_child(std::string_view name) const {
    for (const Element& child : children)
        if (child.short_name == name)
            return &child;
    return nullptr;
}

namespace {

// Reference attributes compare by resolved target: "SubsystemA" and
// "P.SubsystemA" are the same reference when both reach the same element.
bool attribute_values_equal(const Model& model_a, const ParentMap& parents_a, const Element& a,
                            const Model& model_b, const ParentMap& parents_b, const Element& b,
                            const Attribute& attr_a, const Attribute& attr_b) {
    const MetamodelRegistry& reg_a = MetamodelRegistry::for_version(model_a.version);
    const AttributeSpec* spec = reg_a.find_attribute(a.kind, attr_a.name);
    if (spec == nullptr || spec->shape == ValueShape::DirectionEnum)
        return attr_a.value == attr_b.value;

    if (spec->shape == ValueShape::Reference) {
        ResolveResult ra = resolve(model_a, parents_a, QualifiedRef::from_text(attr_a.value), &a);
        ResolveResult rb = resolve(model_b, parents_b, QualifiedRef::from_text(attr_b.value), &b);
        if (!ra || !rb)
            return attr_a.value == attr_b.value;
        return qualified_name(parents_a, *ra.element) == qualified_name(parents_b, *rb.element);
    }

    PortRefResult pa = resolve_port_ref(model_a, parents_a, attr_a.value, &a);
    PortRefResult pb = resolve_port_ref(model_b, parents_b, attr_b.value, &b);
    if (!pa || !pb)
        return attr_a.value == attr_b.value;
    return qualified_name(parents_a, *pa.prototype) == qualified_name(parents_b, *pb.prototype) &&
           pa.port->short_name == pb.port->short_name;
}

bool elements_equal(const Model& model_a, const ParentMap& parents_a, const Element& a,
                    const Model& model_b, const ParentMap& parents_b, const Element& b) {
    if (a.kind != b.kind || a.short_name != b.short_name)
        return false;
    if (a.attributes.size() != b.attributes.size())
        return false;
    for (const Attribute& attr_a : a.attributes) {
        const Attribute* attr_b = b.find_attribute(attr_a.name);
        if (attr_b == nullptr)
            return false;
        if (!attribute_values_equal(model_a, parents_a, a, model_b, parents_b, b, attr_a, *attr_b))
            return false;
    }
    if (a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!elements_equal(model_a, parents_a, a.children[i], model_b, parents_b, b.children[i]))
            return false;
    return true;
}

std::size_t count_elements(const Element& element) {
    std::size_t n = 1;
    for (const Element& child : element.children)
        n += count_elements(child);
    return n;
}

} // namespace

bool model_equal(const Model& a, const Model& b) {
    if (a.roots.size() != b.roots.size())
        return false;
    ParentMap parents_a(a);
    ParentMap parents_b(b);
    for (std::size_t i = 0; i < a.roots.size(); ++i)
        if (!elements_equal(a, parents_a, a.roots[i], b, parents_b, b.roots[i]))
            return false;
    return true;
}

std::size_t element_count(const Model& model) {
    std::size_t n = 0;
    for (const Element& root : model.roots)
        n += count_elements(root);
    return n;
}

} // namespace eatxt
