#include "eatxt/scoping.hpp"

#include <algorithm>
#include <stdexcept>

namespace eatxt {

namespace {

void collect_parents(const Element& element,
                     std::unordered_map<const Element*, const Element*>& parents) {
    for (const Element& child : element.children) {
        parents.emplace(&child, &element);
        collect_parents(child, parents);
    }
}

const Element* find_root(const Model& model, std::string_view name) {
    for (const Element& root : model.roots)
        if (root.short_name == name)
            return &root;
    return nullptr;
}

const Element* navigate(const Element* from, const QualifiedRef& ref, std::size_t first,
                        std::string& failed_segment) {
    const Element* current = from;
    for (std::size_t i = first; i < ref.segments.size(); ++i) {
        current = current->find_child(ref.segments[i]);
        if (current == nullptr) {
            failed_segment = ref.segments[i];
            return nullptr;
        }
    }
    return current;
}

} // namespace

ParentMap::ParentMap(const Model& model) {
    for (const Element& root : model.roots) {
        parents_.emplace(&root, nullptr);
        collect_parents(root, parents_);
    }
}

const Element* ParentMap::parent_of(const Element& element) const {
    auto it = parents_.find(&element);
    if (it == parents_.end())
        throw std::invalid_argument("element is not part of the model");
    return it->second;
}

bool ParentMap::contains(const Element& element) const {
    return parents_.find(&element) != parents_.end();
}

QualifiedRef qualified_name(const ParentMap& parents, const Element& element) {
    QualifiedRef ref;
    ref.absolute = true;
    for (const Element* e = &element; e != nullptr; e = parents.parent_of(*e))
        ref.segments.push_back(e->short_name);
    std::reverse(ref.segments.begin(), ref.segments.end());
    return ref;
}

QualifiedRef qualified_name(const Model& model, const Element& element) {
    return qualified_name(ParentMap(model), element);
}

ResolveResult resolve(const Model& model, const ParentMap& parents, const QualifiedRef& ref,
                      const Element* scope) {
    ResolveResult result;
    if (ref.segments.empty()) {
        result.failed_segment = "";
        return result;
    }
    const std::string& head = ref.segments.front();

    const Element* anchor = nullptr;
    if (ref.absolute || scope == nullptr) {
        anchor = find_root(model, head);
    } else {
        // Innermost match wins: the scope's own children first, then each
        // enclosing ancestor, finally the model roots.
        for (const Element* s = scope; s != nullptr && anchor == nullptr; s = parents.parent_of(*s))
            anchor = s->find_child(head);
        if (anchor == nullptr)
            anchor = find_root(model, head);
    }
    if (anchor == nullptr) {
        result.failed_segment = head;
        return result;
    }
    result.element = navigate(anchor, ref, 1, result.failed_segment);
    return result;
}

ResolveResult resolve(const Model& model, const QualifiedRef& ref, const Element* scope) {
    return resolve(model, ParentMap(model), ref, scope);
}

PortRefResult resolve_port_ref(const Model& model, const ParentMap& parents,
                               std::string_view text, const Element* scope) {
    PortRefResult result;
    QualifiedRef ref = QualifiedRef::from_text(text);
    if (ref.segments.size() != 2) {
        result.failed_segment = std::string(text);
        return result;
    }

    QualifiedRef proto_ref;
    proto_ref.segments.push_back(ref.segments[0]);
    ResolveResult proto = resolve(model, parents, proto_ref, scope);
    if (!proto || proto.element->kind != ElementKind::DesignFunctionPrototype) {
        result.failed_segment = ref.segments[0];
        return result;
    }
    result.prototype = proto.element;

    const Attribute* type_attr = proto.element->find_attribute("type");
    if (type_attr == nullptr) {
        result.failed_segment = ref.segments[1];
        return result;
    }
    ResolveResult type = resolve(model, parents, QualifiedRef::from_text(type_attr->value),
                                 proto.element);
    if (!type) {
        result.failed_segment = ref.segments[1];
        return result;
    }
    const Element* port = type.element->find_child(ref.segments[1]);
    if (port == nullptr || port->kind != ElementKind::FunctionFlowPort) {
        result.failed_segment = ref.segments[1];
        return result;
    }
    result.port = port;
    return result;
}

std::string minimize_ref(const Model& model, const ParentMap& parents, const Element& target,
                         const Element* scope) {
    QualifiedRef full = qualified_name(parents, target);
    for (std::size_t take = 1; take <= full.segments.size(); ++take) {
        QualifiedRef candidate;
        candidate.segments.assign(full.segments.end() - take, full.segments.end());
        ResolveResult r = resolve(model, parents, candidate, scope);
        if (r && r.element == &target)
            return candidate.text();
    }
    return full.text();
}

} // namespace eatxt
