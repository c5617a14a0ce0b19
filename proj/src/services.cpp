#include "eatxt/services.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "eatxt/lexer.hpp"
#include "eatxt/parser.hpp"
#include "eatxt/registry.hpp"
#include "eatxt/scoping.hpp"

namespace eatxt {

namespace {

// ---------------------------------------------------------------------------
// Outline
// ---------------------------------------------------------------------------

class OutlineBuilder {
public:
    OutlineBuilder(const Model& model, int max_depth)
        : model_(model), parents_(model), max_depth_(max_depth) {}

    OutlineResult run() {
        OutlineResult result;
        for (const Element& root : model_.roots) {
            if (max_depth_ < 1)
                break;
            result.nodes.push_back(build(root, "", 1, false));
        }
        result.diagnostics = std::move(diagnostics_);
        return result;
    }

private:
    OutlineNode build(const Element& element, const std::string& parent_path, int depth,
                      bool synthetic) {
        OutlineNode node;
        node.kind = element.kind;
        node.synthetic = synthetic;
        node.path = parent_path.empty() ? element.short_name
                                        : parent_path + "." + element.short_name;
        node.label = element.short_name;

        const Element* type = nullptr;
        bool recursive = false;
        if (element.kind == ElementKind::DesignFunctionPrototype) {
            if (const Attribute* attr = element.find_attribute("type")) {
                ResolveResult r =
                    resolve(model_, parents_, QualifiedRef::from_text(attr->value), &element);
                if (r) {
                    type = r.element;
                    node.label += " : " + type->short_name;
                    recursive = std::find(expansion_path_.begin(), expansion_path_.end(), type) !=
                                expansion_path_.end();
                    if (recursive)
                        node.label += " …(recursive)";
                } else {
                    node.label += " : " + attr->value;
                    if (reported_.insert(attr).second) {
                        diagnostics_.push_back(Diagnostic::error(
                            diag::unresolved_reference, attr->value_span.value_or(Span{}),
                            "cannot resolve '" + r.failed_segment + "'"));
                    }
                }
            }
        }

        if (depth >= max_depth_)
            return node;

        expansion_path_.push_back(&element);
        for (const Element& child : element.children)
            node.children.push_back(build(child, node.path, depth + 1, synthetic));
        if (type != nullptr && !recursive) {
            // Materialize the type's contents below the prototype, the way a
            // tree view keeps expanding through the cross-reference.
            expansion_path_.push_back(type);
            for (const Element& mirrored : type->children)
                node.children.push_back(build(mirrored, node.path, depth + 1, true));
            expansion_path_.pop_back();
        }
        expansion_path_.pop_back();
        return node;
    }

    const Model& model_;
    ParentMap parents_;
    int max_depth_;
    std::vector<const Element*> expansion_path_;
    std::unordered_set<const Attribute*> reported_;
    std::vector<Diagnostic> diagnostics_;
};

// ---------------------------------------------------------------------------
// Fresh names and templates
// ---------------------------------------------------------------------------

template <typename HasName>
std::string fresh_name_among(const std::vector<HasName>& siblings, ElementKind kind) {
    for (int n = 1;; ++n) {
        std::string candidate = std::string(keyword_of(kind)) + std::to_string(n);
        bool taken = std::any_of(siblings.begin(), siblings.end(), [&](const auto& sibling) {
            if constexpr (std::is_same_v<HasName, std::string>)
                return sibling == candidate;
            else
                return sibling.short_name == candidate;
        });
        if (!taken)
            return candidate;
    }
}

std::string_view placeholder_for(const AttributeSpec& spec) {
    switch (spec.shape) {
    case ValueShape::DirectionEnum:
        return "in";
    case ValueShape::Reference:
        return "TypeName";
    case ValueShape::PortReference:
        return spec.name == "to" ? "sub2.port1" : "sub1.port1";
    }
    return "value";
}

std::vector<const AttributeSpec*> required_attributes(ElementKind kind, SchemaVersion version) {
    std::vector<const AttributeSpec*> required;
    for (const AttributeSpec& spec : MetamodelRegistry::for_version(version).attributes_of(kind))
        if (spec.required)
            required.push_back(&spec);
    return required;
}

/// Insertion skeleton for content assist: always block form, so the caret
/// lands inside a body ready for the next statement.
std::string completion_skeleton(ElementKind kind, std::string_view name, SchemaVersion version) {
    std::string out = std::string(keyword_of(kind)) + " " + std::string(name) + " {\n";
    std::vector<const AttributeSpec*> required = required_attributes(kind, version);
    if (required.empty()) {
        out += "    \n";
    } else {
        for (const AttributeSpec* spec : required)
            out += "    " + std::string(spec->name) + " " + std::string(placeholder_for(*spec)) +
                   ";\n";
    }
    out += "}";
    return out;
}

// ---------------------------------------------------------------------------
// Completion
// ---------------------------------------------------------------------------

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool inside_comment(std::string_view source, std::size_t offset) {
    std::size_t line_start = offset;
    while (line_start > 0 && source[line_start - 1] != '\n' && source[line_start - 1] != '\r')
        --line_start;
    std::string_view line = source.substr(line_start, offset - line_start);
    return line.find("//") != std::string_view::npos;
}

struct CompletionContext {
    bool determinate = false;
    std::optional<ElementKind> container; // nullopt = top level
    std::vector<std::string> container_path;
    // Current statement shape before the offset:
    const Token* statement_keyword = nullptr; // `Kind |` name position
    const Token* statement_attr = nullptr;    // `attr |` value position
    bool at_statement_start = false;
};

CompletionContext analyze_position(const std::vector<Token>& tokens, std::size_t offset) {
    CompletionContext ctx;
    struct Frame {
        std::optional<ElementKind> kind;
        std::string name;
    };
    std::vector<Frame> stack;
    std::vector<const Token*> stmt;

    for (const Token& t : tokens) {
        if (t.kind == TokenKind::Eof || t.offset + t.text.size() > offset)
            break;
        if (t.is_punct('{')) {
            Frame frame;
            if (stmt.size() == 2 && stmt[0]->kind == TokenKind::Keyword &&
                stmt[1]->kind == TokenKind::Identifier) {
                frame.kind = kind_from_keyword(stmt[0]->text);
                frame.name = stmt[1]->text;
            }
            stack.push_back(std::move(frame));
            stmt.clear();
        } else if (t.is_punct('}')) {
            if (!stack.empty())
                stack.pop_back();
            stmt.clear();
        } else if (t.is_punct(';')) {
            stmt.clear();
        } else {
            stmt.push_back(&t);
        }
    }

    if (!stack.empty()) {
        if (!stack.back().kind)
            return ctx; // inside an unrecognized block
        ctx.container = stack.back().kind;
    }
    for (const Frame& frame : stack)
        ctx.container_path.push_back(frame.name);

    if (stmt.empty()) {
        ctx.determinate = true;
        ctx.at_statement_start = true;
    } else if (stmt.size() == 1 && stmt[0]->kind == TokenKind::Keyword) {
        ctx.determinate = true;
        ctx.statement_keyword = stmt[0];
    } else if (stmt.size() == 1 && stmt[0]->kind == TokenKind::Identifier) {
        ctx.determinate = true;
        ctx.statement_attr = stmt[0];
    }
    return ctx;
}

const Element* find_by_path(const Model& model, const std::vector<std::string>& path) {
    const Element* current = nullptr;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const std::vector<Element>& candidates = i == 0 ? model.roots : current->children;
        current = nullptr;
        for (const Element& candidate : candidates) {
            if (candidate.short_name == path[i]) {
                current = &candidate;
                break;
            }
        }
        if (current == nullptr)
            return nullptr;
    }
    return current;
}

void collect_elements_of_kind(const Model& model, ElementKind kind,
                              std::vector<const Element*>& out) {
    struct Walker {
        ElementKind kind;
        std::vector<const Element*>& out;
        void walk(const Element& e) {
            if (e.kind == kind)
                out.push_back(&e);
            for (const Element& child : e.children)
                walk(child);
        }
    } walker{kind, out};
    for (const Element& root : model.roots)
        walker.walk(root);
}

void sort_and_dedupe(std::vector<CompletionItem>& items) {
    std::sort(items.begin(), items.end(),
              [](const CompletionItem& a, const CompletionItem& b) { return a.label < b.label; });
    items.erase(std::unique(items.begin(), items.end(),
                            [](const CompletionItem& a, const CompletionItem& b) {
                                return a.label == b.label;
                            }),
                items.end());
}

std::vector<CompletionItem> reference_items(const Model& model, const ParentMap& parents,
                                            const Element& scope, const AttributeSpec& spec) {
    std::vector<CompletionItem> items;
    if (spec.shape == ValueShape::Reference && spec.target) {
        std::vector<const Element*> candidates;
        collect_elements_of_kind(model, *spec.target, candidates);
        for (const Element* candidate : candidates) {
            std::string minimal = minimize_ref(model, parents, *candidate, &scope);
            ResolveResult check = resolve(model, parents, QualifiedRef::from_text(minimal), &scope);
            if (!check || check.element != candidate)
                continue; // shadowed beyond repair
            items.push_back(CompletionItem{minimal, minimal + ";", CompletionKind::Reference});
        }
    } else if (spec.shape == ValueShape::PortReference) {
        std::vector<const Element*> prototypes;
        collect_elements_of_kind(model, ElementKind::DesignFunctionPrototype, prototypes);
        for (const Element* prototype : prototypes) {
            std::string minimal = minimize_ref(model, parents, *prototype, &scope);
            if (minimal.find('.') != std::string::npos)
                continue; // a port ref names the prototype by a single segment
            ResolveResult check = resolve(model, parents, QualifiedRef::from_text(minimal), &scope);
            if (!check || check.element != prototype)
                continue;
            const Attribute* type_attr = prototype->find_attribute("type");
            if (type_attr == nullptr)
                continue;
            ResolveResult type = resolve(model, parents, QualifiedRef::from_text(type_attr->value),
                                         prototype);
            if (!type)
                continue;
            for (const Element& port : type.element->children) {
                if (port.kind != ElementKind::FunctionFlowPort)
                    continue;
                std::string label = minimal + "." + port.short_name;
                items.push_back(CompletionItem{label, label + ";", CompletionKind::Reference});
            }
        }
    }
    return items;
}

} // namespace

std::string_view to_string(CompletionKind kind) {
    switch (kind) {
    case CompletionKind::Keyword: return "keyword";
    case CompletionKind::Reference: return "reference";
    case CompletionKind::Template: return "template";
    case CompletionKind::FreshName: return "fresh-name";
    }
    return "";
}

OutlineResult outline(const Model& model, int max_depth) {
    return OutlineBuilder(model, max_depth).run();
}

std::string fresh_name(const Element& scope, ElementKind kind) {
    return fresh_name_among(scope.children, kind);
}

std::string expand_template(ElementKind kind, std::string_view name) {
    std::vector<const AttributeSpec*> required =
        required_attributes(kind, SchemaVersion::latest());
    std::string out = std::string(keyword_of(kind)) + " " + std::string(name);
    if (required.empty())
        return out + ";\n";
    out += " {\n";
    for (const AttributeSpec* spec : required)
        out += "    " + std::string(spec->name) + " " + std::string(placeholder_for(*spec)) +
               ";\n";
    out += "}\n";
    return out;
}

std::vector<CompletionItem> complete(std::string_view source, std::size_t offset,
                                     SchemaVersion version) {
    if (offset > source.size())
        return {};
    // Mid-word or mid-comment positions are indeterminate for insertion.
    if (offset > 0 && is_word_char(source[offset - 1]))
        return {};
    if (inside_comment(source, offset))
        return {};

    LexResult lexed = lex(source);
    CompletionContext ctx = analyze_position(lexed.tokens, offset);
    if (!ctx.determinate)
        return {};

    ParseResult parsed = parse(source, version);
    const Element* container_element =
        ctx.container ? find_by_path(parsed.model, ctx.container_path) : nullptr;
    const MetamodelRegistry& registry = MetamodelRegistry::for_version(version);

    std::vector<CompletionItem> items;

    if (ctx.at_statement_start) {
        auto kinds = ctx.container ? registry.children_of(*ctx.container) : registry.root_kinds();
        std::vector<std::string> sibling_names;
        if (ctx.container) {
            if (container_element != nullptr)
                for (const Element& child : container_element->children)
                    sibling_names.push_back(child.short_name);
        } else {
            for (const Element& root : parsed.model.roots)
                sibling_names.push_back(root.short_name);
        }
        for (ElementKind kind : kinds) {
            std::string fresh = fresh_name_among(sibling_names, kind);
            items.push_back(CompletionItem{std::string(keyword_of(kind)),
                                           completion_skeleton(kind, fresh, version),
                                           CompletionKind::Template});
        }
    } else if (ctx.statement_keyword != nullptr) {
        ElementKind kind = *kind_from_keyword(ctx.statement_keyword->text);
        std::vector<std::string> sibling_names;
        if (container_element != nullptr)
            for (const Element& child : container_element->children)
                sibling_names.push_back(child.short_name);
        else if (!ctx.container)
            for (const Element& root : parsed.model.roots)
                sibling_names.push_back(root.short_name);
        items.push_back(CompletionItem{fresh_name_among(sibling_names, kind),
                                       fresh_name_among(sibling_names, kind),
                                       CompletionKind::FreshName});
    } else if (ctx.statement_attr != nullptr && ctx.container && container_element != nullptr) {
        const AttributeSpec* spec =
            registry.find_attribute(*ctx.container, ctx.statement_attr->text);
        if (spec == nullptr)
            return {};
        if (spec->shape == ValueShape::DirectionEnum) {
            for (std::string_view literal : kDirectionLiterals)
                items.push_back(CompletionItem{std::string(literal), std::string(literal) + ";",
                                               CompletionKind::Keyword});
        } else {
            ParentMap parents(parsed.model);
            items = reference_items(parsed.model, parents, *container_element, *spec);
        }
    }

    sort_and_dedupe(items);
    return items;
}

} // namespace eatxt
