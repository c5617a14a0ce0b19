#include "eatxt/validate.hpp"

#include <set>
#include <sstream>
#include <unordered_set>

#include "eatxt/registry.hpp"
#include "eatxt/scoping.hpp"
#include "levenshtein.hpp"

namespace eatxt {

namespace {

Span span_or_default(const std::optional<Span>& span) { return span.value_or(Span{}); }

class Validator {
public:
    Validator(const Model& model)
        : model_(model),
          parents_(model),
          registry_(MetamodelRegistry::for_version(model.version)) {}

    std::vector<Diagnostic> run() {
        check_roots();
        check_sibling_names(model_.roots);
        for (const Element& root : model_.roots)
            check_element(root);
        sort_by_span(findings_);
        return std::move(findings_);
    }

private:
    void error(std::string_view code, Span span, std::string message, std::string hint = {}) {
        findings_.push_back(Diagnostic::error(code, span, std::move(message), std::move(hint)));
    }

    void warning(std::string_view code, Span span, std::string message) {
        findings_.push_back(Diagnostic::warning(code, span, std::move(message)));
    }

    void check_roots() {
        for (const Element& root : model_.roots) {
            auto legal = registry_.root_kinds();
            if (std::find(legal.begin(), legal.end(), root.kind) == legal.end()) {
                std::ostringstream msg;
                msg << "element '" << keyword_of(root.kind)
                    << "' is not allowed at the top level (version " << model_.version.str()
                    << "); expected one of: " << keyword_of(ElementKind::EAPackage);
                error(diag::illegal_for_version, span_or_default(root.span), msg.str());
            }
        }
    }

    void check_sibling_names(const std::vector<Element>& siblings) {
        std::unordered_set<std::string_view> seen;
        for (const Element& child : siblings) {
            if (!seen.insert(child.short_name).second) {
                std::ostringstream msg;
                msg << "duplicate name '" << child.short_name
                    << "'; shortNames must be unique among siblings";
                error(diag::duplicate_sibling_name, span_or_default(child.span), msg.str());
            }
        }
    }

    void check_element(const Element& element) {
        check_attributes(element);
        check_sibling_names(element.children);
        for (const Element& child : element.children) {
            if (!registry_.containment_allowed(element.kind, child.kind)) {
                std::ostringstream msg;
                msg << "element '" << keyword_of(child.kind) << "' is not allowed inside '"
                    << keyword_of(element.kind) << "' (version " << model_.version.str() << ")";
                error(diag::illegal_for_version, span_or_default(child.span), msg.str());
            }
            check_element(child);
        }
        if (element.kind == ElementKind::FunctionConnector)
            check_connector_directions(element);
    }

    void check_attributes(const Element& element) {
        std::unordered_set<std::string_view> seen;
        for (const Attribute& attr : element.attributes) {
            Span name_span = span_or_default(attr.name_span);
            if (!seen.insert(attr.name).second) {
                error(diag::illegal_for_version, name_span,
                      "attribute '" + attr.name + "' appears more than once on '" +
                          element.short_name + "'");
                continue;
            }
            const AttributeSpec* spec = registry_.find_attribute(element.kind, attr.name);
            if (spec == nullptr) {
                report_unknown_attribute(element, attr);
                continue;
            }
            check_attribute_value(element, attr, *spec);
        }
        for (const AttributeSpec& spec : registry_.attributes_of(element.kind)) {
            if (spec.required && element.find_attribute(spec.name) == nullptr) {
                std::ostringstream msg;
                msg << "required attribute '" << spec.name << "' is missing on '"
                    << element.short_name << "' (" << keyword_of(element.kind) << ")";
                error(diag::illegal_for_version, span_or_default(element.span), msg.str());
            }
        }
    }

    void report_unknown_attribute(const Element& element, const Attribute& attr) {
        Span span = span_or_default(attr.name_span);
        std::ostringstream msg;
        if (registry_.known_in_other_version(element.kind, attr.name)) {
            // The §4.2 story: the attribute exists in another schema version.
            msg << "attribute '" << attr.name << "' is not necessary for the current version ("
                << model_.version.str() << ")";
            error(diag::illegal_for_version, span, msg.str(),
                  "run migrate to convert the model between versions");
            return;
        }
        msg << "attribute '" << attr.name << "' is not defined for '" << keyword_of(element.kind)
            << "' (version " << model_.version.str() << ")";
        std::vector<std::string_view> names;
        for (const AttributeSpec& spec : registry_.attributes_of(element.kind))
            names.push_back(spec.name);
        std::string hint;
        if (auto suggestion = detail::suggest(attr.name, names))
            hint = "did you mean '" + *suggestion + "'?";
        error(diag::illegal_for_version, span, msg.str(), hint);
    }

    void check_attribute_value(const Element& element, const Attribute& attr,
                               const AttributeSpec& spec) {
        Span value_span = span_or_default(attr.value_span);
        switch (spec.shape) {
        case ValueShape::DirectionEnum:
            if (!is_direction_literal(attr.value)) {
                error(diag::illegal_for_version, value_span,
                      "attribute '" + attr.name + "' expects one of: in, out, inout (got '" +
                          attr.value + "')");
            }
            break;
        case ValueShape::Reference: {
            ResolveResult r =
                resolve(model_, parents_, QualifiedRef::from_text(attr.value), &element);
            if (!r) {
                error(diag::unresolved_reference, value_span,
                      "cannot resolve '" + r.failed_segment + "'");
            } else if (spec.target && r.element->kind != *spec.target) {
                std::ostringstream msg;
                msg << "reference '" << attr.value << "' resolves to '"
                    << keyword_of(r.element->kind) << "', expected '" << keyword_of(*spec.target)
                    << "'";
                error(diag::unresolved_reference, value_span, msg.str());
            }
            break;
        }
        case ValueShape::PortReference: {
            PortRefResult r = resolve_port_ref(model_, parents_, attr.value, &element);
            if (!r) {
                error(diag::unresolved_reference, value_span,
                      "cannot resolve '" + r.failed_segment + "' (expected prototype.port)");
            }
            break;
        }
        }
    }

    void check_connector_directions(const Element& connector) {
        auto endpoint_direction = [&](std::string_view attr_name) -> const Attribute* {
            const Attribute* endpoint = connector.find_attribute(attr_name);
            if (endpoint == nullptr)
                return nullptr;
            PortRefResult r = resolve_port_ref(model_, parents_, endpoint->value, &connector);
            if (!r)
                return nullptr;
            return r.port->find_attribute("direction");
        };
        if (const Attribute* dir = endpoint_direction("from");
            dir != nullptr && dir->value != "out" && dir->value != "inout") {
            const Attribute* endpoint = connector.find_attribute("from");
            warning(diag::direction_mismatch, span_or_default(endpoint->value_span),
                    "connector '" + connector.short_name + "': 'from' endpoint '" +
                        endpoint->value + "' has direction " + dir->value +
                        "; expected out or inout");
        }
        if (const Attribute* dir = endpoint_direction("to");
            dir != nullptr && dir->value != "in" && dir->value != "inout") {
            const Attribute* endpoint = connector.find_attribute("to");
            warning(diag::direction_mismatch, span_or_default(endpoint->value_span),
                    "connector '" + connector.short_name + "': 'to' endpoint '" +
                        endpoint->value + "' has direction " + dir->value +
                        "; expected in or inout");
        }
    }

    const Model& model_;
    ParentMap parents_;
    const MetamodelRegistry& registry_;
    std::vector<Diagnostic> findings_;
};

} // namespace

std::vector<Diagnostic> validate(const Model& model) { return Validator(model).run(); }

} // namespace eatxt
