#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "eatxt/model.hpp"

namespace eatxt {

enum class ValueShape {
    DirectionEnum, // in | out | inout
    Reference,     // dotted path to an element of `target` kind
    PortReference, // prototype.port pair
};

struct AttributeSpec {
    std::string_view name;
    ValueShape shape;
    std::optional<ElementKind> target; // for Reference; PortReference targets ports
    bool required = false;
};

inline constexpr std::string_view kDirectionLiterals[] = {"in", "out", "inout"};
bool is_direction_literal(std::string_view text);

/// Version-keyed tables of legal containment and legal attributes.
/// Instances are immutable and shared; look one up with for_version().
class MetamodelRegistry {
public:
    static const MetamodelRegistry& for_version(SchemaVersion version);

    SchemaVersion version() const { return version_; }

    std::span<const ElementKind> children_of(ElementKind kind) const;
    std::span<const AttributeSpec> attributes_of(ElementKind kind) const;
    const AttributeSpec* find_attribute(ElementKind kind, std::string_view name) const;
    bool containment_allowed(ElementKind parent, ElementKind child) const;

    /// Kinds legal at the top level of a model.
    std::span<const ElementKind> root_kinds() const;

    /// True if `name` is an attribute of `kind` in some other registered
    /// version (used for the version-difference diagnostic message).
    bool known_in_other_version(ElementKind kind, std::string_view name) const;

private:
    explicit MetamodelRegistry(SchemaVersion version);

    SchemaVersion version_;
    std::vector<ElementKind> children_[kElementKindCount];
    std::vector<AttributeSpec> attributes_[kElementKindCount];
};

} // namespace eatxt
