#pragma once

#include <string>
#include <string_view>
#include <unordered_map>

#include "eatxt/model.hpp"

namespace eatxt {

/// Parent links for one model, built in a single pass. Valid as long as the
/// model is not mutated or moved.
class ParentMap {
public:
    explicit ParentMap(const Model& model);

    /// nullptr for roots; throws std::invalid_argument for foreign elements.
    const Element* parent_of(const Element& element) const;
    bool contains(const Element& element) const;

private:
    std::unordered_map<const Element*, const Element*> parents_;
};

/// Absolute path of shortNames from a root down to `element`.
QualifiedRef qualified_name(const ParentMap& parents, const Element& element);
QualifiedRef qualified_name(const Model& model, const Element& element);

struct ResolveResult {
    const Element* element = nullptr; // nullptr: resolution failed
    std::string failed_segment;       // first segment that did not match

    explicit operator bool() const { return element != nullptr; }
};

/// Scope-chain resolution. The first segment is looked up in the children of
/// `scope`, then in each enclosing ancestor outward, finally among the roots;
/// the innermost match wins. Remaining segments navigate child-by-shortName.
/// Absolute refs (EAXML form) start at the roots directly, as does a null
/// `scope`.
ResolveResult resolve(const Model& model, const ParentMap& parents, const QualifiedRef& ref,
                      const Element* scope);
ResolveResult resolve(const Model& model, const QualifiedRef& ref, const Element* scope);

struct PortRefResult {
    const Element* prototype = nullptr;
    const Element* port = nullptr;
    std::string failed_segment;

    explicit operator bool() const { return port != nullptr; }
};

/// Resolves a `prototype.port` pair: the prototype by scope chain, the port
/// among the children of the prototype's resolved type.
PortRefResult resolve_port_ref(const Model& model, const ParentMap& parents,
                               std::string_view text, const Element* scope);

/// Shortest dotted suffix of the target's absolute path that resolves back to
/// `target` from `scope`. Falls back to the full dotted path when shadowing
/// leaves no resolvable suffix.
std::string minimize_ref(const Model& model, const ParentMap& parents, const Element& target,
                         const Element* scope);

} // namespace eatxt
