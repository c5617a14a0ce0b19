#include "eatxt/registry.hpp"

#include <algorithm>
#include <map>

namespace eatxt {

bool is_direction_literal(std::string_view text) {
    return std::find(std::begin(kDirectionLiterals), std::end(kDirectionLiterals), text) !=
           std::end(kDirectionLiterals);
}

namespace {

struct ContainmentRow {
    ElementKind parent;
    std::initializer_list<ElementKind> children;
};

// Shared across all versions. The package level holds packages and types;
// function/hardware types hold ports, prototype parts and connectors.
constexpr ContainmentRow kContainment[] = {
    {ElementKind::EAPackage,
     {ElementKind::EAPackage, ElementKind::DesignFunctionType, ElementKind::AnalysisFunctionType,
      ElementKind::HardwareComponentType, ElementKind::HardwareFunctionType}},
    {ElementKind::DesignFunctionType,
     {ElementKind::FunctionFlowPort, ElementKind::DesignFunctionPrototype,
      ElementKind::FunctionConnector}},
    {ElementKind::AnalysisFunctionType,
     {ElementKind::FunctionFlowPort, ElementKind::DesignFunctionPrototype,
      ElementKind::FunctionConnector}},
    {ElementKind::HardwareComponentType, {ElementKind::FunctionFlowPort}},
    {ElementKind::HardwareFunctionType,
     {ElementKind::FunctionFlowPort, ElementKind::DesignFunctionPrototype,
      ElementKind::FunctionConnector}},
    {ElementKind::FunctionFlowPort, {}},
    {ElementKind::DesignFunctionPrototype, {}},
    {ElementKind::FunctionConnector, {}},
};

struct AttributeRow {
    ElementKind kind;
    AttributeSpec spec;
    // Empty = attribute exists in every version.
    std::initializer_list<std::string_view> only_in_versions;
};

const AttributeRow kAttributes[] = {
    {ElementKind::FunctionFlowPort,
     {"direction", ValueShape::DirectionEnum, std::nullopt, true},
     {}},
    {ElementKind::DesignFunctionPrototype,
     {"type", ValueShape::Reference, ElementKind::DesignFunctionType, true},
     {}},
    {ElementKind::FunctionConnector,
     {"from", ValueShape::PortReference, ElementKind::FunctionFlowPort, true},
     {}},
    {ElementKind::FunctionConnector,
     {"to", ValueShape::PortReference, ElementKind::FunctionFlowPort, true},
     {}},
    // The one version-sensitive row: 2.2 dropped this reference.
    {ElementKind::HardwareFunctionType,
     {"hardwareComponent", ValueShape::Reference, ElementKind::HardwareComponentType, false},
     {"2.1.12"}},
};

constexpr ElementKind kRootKinds[] = {ElementKind::EAPackage};

} // namespace

MetamodelRegistry::MetamodelRegistry(SchemaVersion version) : version_(version) {
    for (const ContainmentRow& row : kContainment)
        children_[static_cast<int>(row.parent)].assign(row.children.begin(), row.children.end());
    for (const AttributeRow& row : kAttributes) {
        bool in_this_version =
            row.only_in_versions.size() == 0 ||
            std::any_of(row.only_in_versions.begin(), row.only_in_versions.end(),
                        [&](std::string_view id) { return id == version.str(); });
        if (in_this_version)
            attributes_[static_cast<int>(row.kind)].push_back(row.spec);
    }
}

const MetamodelRegistry& MetamodelRegistry::for_version(SchemaVersion version) {
    static const std::map<SchemaVersion, MetamodelRegistry> registries = [] {
        std::map<SchemaVersion, MetamodelRegistry> m;
        for (SchemaVersion v : SchemaVersion::all())
            m.emplace(v, MetamodelRegistry(v));
        return m;
    }();
    return registries.at(version);
}

std::span<const ElementKind> MetamodelRegistry::children_of(ElementKind kind) const {
    return children_[static_cast<int>(kind)];
}

std::span<const AttributeSpec> MetamodelRegistry::attributes_of(ElementKind kind) const {
    return attributes_[static_cast<int>(kind)];
}

const AttributeSpec* MetamodelRegistry::find_attribute(ElementKind kind,
                                                       std::string_view name) const {
    for (const AttributeSpec& spec : attributes_[static_cast<int>(kind)])
        if (spec.name == name)
            return &spec;
    return nullptr;
}

bool MetamodelRegistry::containment_allowed(ElementKind parent, ElementKind child) const {
    auto children = children_of(parent);
    return std::find(children.begin(), children.end(), child) != children.end();
}

std::span<const ElementKind> MetamodelRegistry::root_kinds() const { return kRootKinds; }

bool MetamodelRegistry::known_in_other_version(ElementKind kind, std::string_view name) const {
    for (SchemaVersion other : SchemaVersion::all()) {
        if (other == version_)
            continue;
        if (for_version(other).find_attribute(kind, name) != nullptr)
            return true;
    }
    return false;
}

} // namespace eatxt
