#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eatxt/diagnostics.hpp"
#include "eatxt/model.hpp"

namespace eatxt {

/// One outline entry. Prototype nodes are labeled "name : TypeName" and gain
/// synthetic children mirroring the contents of their resolved type, so the
/// tree keeps expanding below a prototype instead of stopping at it.
struct OutlineNode {
    std::string label;
    ElementKind kind = ElementKind::EAPackage;
    std::string path; // dotted instance path, unique within the outline
    bool synthetic = false;
    std::vector<OutlineNode> children;
};

struct OutlineResult {
    std::vector<OutlineNode> nodes;
    std::vector<Diagnostic> diagnostics; // E003 for unresolvable type refs
};

/// Computes the deep outline. Expansion stops beyond `max_depth` or when a
/// type already occurs on the current expansion path; such nodes get a
/// "…(recursive)" label suffix instead of children.
OutlineResult outline(const Model& model, int max_depth);

enum class CompletionKind { Keyword, Reference, Template, FreshName };

std::string_view to_string(CompletionKind kind);

struct CompletionItem {
    std::string label;
    std::string insert_text;
    CompletionKind kind = CompletionKind::Keyword;
};

/// Content assist at a byte offset, computed from a recovery parse of the
/// possibly-erroneous buffer. At element position: the registry-legal kinds
/// for the container, each as a block template with a fresh unique name. At
/// reference position: the in-scope resolvable targets of the right kind in
/// minimal dotted form. Empty when the position is indeterminate.
std::vector<CompletionItem> complete(std::string_view source, std::size_t offset,
                                     SchemaVersion version);

/// "<KindName><n>" for the smallest n >= 1 that no sibling in `scope` uses.
std::string fresh_name(const Element& scope, ElementKind kind);

/// Canonical skeleton for a new element: required attributes included with
/// placeholder values, short form when the kind has none.
std::string expand_template(ElementKind kind, std::string_view name);

} // namespace eatxt
