#include "eatxt/eaxml.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "eatxt/registry.hpp"
#include "eatxt/scoping.hpp"

namespace eatxt {

namespace {

// ---------------------------------------------------------------------------
// Tag vocabulary
// ---------------------------------------------------------------------------

constexpr std::string_view kRootTag = "EAXML";
constexpr std::string_view kTopLevelTag = "TOP-LEVEL-PACKAGES";
constexpr std::string_view kShortNameTag = "SHORT-NAME";

struct AttrTagRow {
    std::string_view attr_name;
    std::string_view tag;
};

constexpr AttrTagRow kAttrTags[] = {
    {"direction", "DIRECTION"},
    {"type", "TYPE-TREF"},
    {"hardwareComponent", "HARDWARE-COMPONENT-TREF"},
    {"from", "FROM-PORT-IREF"},
    {"to", "TO-PORT-IREF"},
};

std::string_view tag_for_attribute(std::string_view name) {
    for (const AttrTagRow& row : kAttrTags)
        if (row.attr_name == name)
            return row.tag;
    return {};
}

std::string_view attribute_for_tag(std::string_view tag) {
    for (const AttrTagRow& row : kAttrTags)
        if (row.tag == tag)
            return row.attr_name;
    return {};
}

std::string_view container_tag_for(ElementKind child) {
    switch (child) {
    case ElementKind::EAPackage:
        return "SUB-PACKAGES";
    case ElementKind::DesignFunctionType:
    case ElementKind::AnalysisFunctionType:
    case ElementKind::HardwareComponentType:
    case ElementKind::HardwareFunctionType:
        return "ELEMENTS";
    case ElementKind::FunctionFlowPort:
        return "PORTS";
    case ElementKind::DesignFunctionPrototype:
        return "PARTS";
    case ElementKind::FunctionConnector:
        return "CONNECTORS";
    }
    return {};
}

// Fixed serialization order of child containers.
constexpr std::string_view kContainerOrder[] = {"SUB-PACKAGES", "ELEMENTS", "PORTS", "PARTS",
                                                "CONNECTORS"};

bool is_container_tag(std::string_view tag) {
    return std::find(std::begin(kContainerOrder), std::end(kContainerOrder), tag) !=
           std::end(kContainerOrder);
}

std::string direction_to_xml(std::string_view value) {
    std::string out(value);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::optional<std::string> direction_from_xml(std::string_view value) {
    std::string lower(value);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (!is_direction_literal(lower))
        return std::nullopt;
    return lower;
}

std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serializer
// ---------------------------------------------------------------------------

class Serializer {
public:
    explicit Serializer(const Model& model)
        : model_(model),
          parents_(model),
          registry_(MetamodelRegistry::for_version(model.version)) {}

    SerializeResult run() {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out_ << "<" << kRootTag << " xmlns=\"" << kXmlnsPrefix << model_.version.str() << "\">\n";
        if (!model_.roots.empty()) {
            open(kTopLevelTag, 1);
            for (const Element& root : model_.roots)
                write_element(root, 2);
            close(kTopLevelTag, 1);
        }
        out_ << "</" << kRootTag << ">\n";
        if (has_errors(diagnostics_))
            return SerializeResult{"", std::move(diagnostics_)};
        return SerializeResult{out_.str(), std::move(diagnostics_)};
    }

private:
    void indent(int level) {
        for (int i = 0; i < level; ++i)
            out_ << "  ";
    }

    void open(std::string_view tag, int level) {
        indent(level);
        out_ << '<' << tag << ">\n";
    }

    void close(std::string_view tag, int level) {
        indent(level);
        out_ << "</" << tag << ">\n";
    }

    void leaf(std::string_view tag, std::string_view value, int level) {
        indent(level);
        out_ << '<' << tag << '>' << escape_xml(value) << "</" << tag << ">\n";
    }

    void write_element(const Element& element, int level) {
        std::string_view tag = xml_tag_of(element.kind);
        open(tag, level);
        leaf(kShortNameTag, element.short_name, level + 1);
        // Attributes in registry declaration order, so equal models always
        // serialize byte-identically regardless of textual attribute order.
        for (const AttributeSpec& spec : registry_.attributes_of(element.kind)) {
            const Attribute* attr = element.find_attribute(spec.name);
            if (attr == nullptr)
                continue;
            write_attribute(element, *attr, spec, level + 1);
        }
        for (const Attribute& attr : element.attributes) {
            if (registry_.find_attribute(element.kind, attr.name) == nullptr) {
                diagnostics_.push_back(Diagnostic::error(
                    diag::illegal_for_version, attr.name_span.value_or(Span{}),
                    "attribute '" + attr.name + "' is not defined for '" +
                        std::string(keyword_of(element.kind)) + "' (version " +
                        std::string(model_.version.str()) + ") and cannot be serialized"));
            }
        }
        for (std::string_view container : kContainerOrder) {
            bool opened = false;
            for (const Element& child : element.children) {
                if (container_tag_for(child.kind) != container)
                    continue;
                if (!opened) {
                    open(container, level + 1);
                    opened = true;
                }
                write_element(child, level + 2);
            }
            if (opened)
                close(container, level + 1);
        }
        close(tag, level);
    }

    void write_attribute(const Element& owner, const Attribute& attr, const AttributeSpec& spec,
                         int level) {
        std::string_view tag = tag_for_attribute(attr.name);
        switch (spec.shape) {
        case ValueShape::DirectionEnum:
            leaf(tag, direction_to_xml(attr.value), level);
            break;
        case ValueShape::Reference: {
            ResolveResult r =
                resolve(model_, parents_, QualifiedRef::from_text(attr.value), &owner);
            if (!r) {
                diagnostics_.push_back(Diagnostic::error(
                    diag::unresolved_reference, attr.value_span.value_or(Span{}),
                    "cannot resolve '" + r.failed_segment + "'"));
                return;
            }
            leaf(tag, qualified_name(parents_, *r.element).eaxml(), level);
            break;
        }
        case ValueShape::PortReference: {
            PortRefResult r = resolve_port_ref(model_, parents_, attr.value, &owner);
            if (!r) {
                diagnostics_.push_back(Diagnostic::error(
                    diag::unresolved_reference, attr.value_span.value_or(Span{}),
                    "cannot resolve '" + r.failed_segment + "' (expected prototype.port)"));
                return;
            }
            leaf(tag, r.prototype->short_name + "." + r.port->short_name, level);
            break;
        }
        }
    }

    const Model& model_;
    ParentMap parents_;
    const MetamodelRegistry& registry_;
    std::ostringstream out_;
    std::vector<Diagnostic> diagnostics_;
};

// ---------------------------------------------------------------------------
// Scanner: a minimal single-pass XML tokenizer with line/column tracking
// ---------------------------------------------------------------------------

struct XmlEvent {
    enum class Kind { StartTag, EndTag, Text, Eof, Error };
    Kind kind = Kind::Eof;
    std::string name;  // tag name
    std::string text;  // text content (unescaped)
    bool self_closing = false;
    Span span;
};

class XmlScanner {
public:
    explicit XmlScanner(std::string_view xml) : xml_(xml) {}

    XmlEvent next() {
        skip_insignificant();
        if (at_end())
            return make(XmlEvent::Kind::Eof);
        mark();
        if (xml_[pos_] != '<') {
            std::string text;
            while (!at_end() && xml_[pos_] != '<')
                text += take();
            XmlEvent e = make(XmlEvent::Kind::Text);
            e.text = unescape(text);
            return e;
        }
        if (starts_with("</")) {
            advance(2);
            std::string name = read_name();
            skip_ws();
            if (at_end() || xml_[pos_] != '>')
                return error_event("expected '>' to close tag");
            advance(1);
            XmlEvent e = make(XmlEvent::Kind::EndTag);
            e.name = std::move(name);
            return e;
        }
        advance(1);
        std::string name = read_name();
        if (name.empty())
            return error_event("expected a tag name after '<'");
        XmlEvent e = make(XmlEvent::Kind::StartTag);
        e.name = std::move(name);
        // Attributes other than the root xmlns are not part of the format;
        // they are scanned over so a malformed file still gets a precise error.
        while (true) {
            skip_ws();
            if (at_end())
                return error_event("unexpected end of file inside tag");
            if (xml_[pos_] == '>') {
                advance(1);
                return e;
            }
            if (starts_with("/>")) {
                advance(2);
                e.self_closing = true;
                return e;
            }
            std::string attr_name = read_name();
            if (attr_name.empty())
                return error_event("malformed attribute in tag '" + e.name + "'");
            skip_ws();
            if (at_end() || xml_[pos_] != '=')
                return error_event("expected '=' after attribute '" + attr_name + "'");
            advance(1);
            skip_ws();
            if (at_end() || (xml_[pos_] != '"' && xml_[pos_] != '\''))
                return error_event("expected a quoted value for attribute '" + attr_name + "'");
            char quote = take();
            std::string value;
            while (!at_end() && xml_[pos_] != quote)
                value += take();
            if (at_end())
                return error_event("unterminated attribute value");
            advance(1);
        }
    }

    Span here() const { return Span{line_, col_, 1}; }
    std::string error_message; // set when an Error event is returned

private:
    bool at_end() const { return pos_ >= xml_.size(); }

    bool starts_with(std::string_view prefix) const {
        return xml_.substr(pos_).starts_with(prefix);
    }

    char take() {
        char c = xml_[pos_++];
        if (c == '\r') {
            if (!at_end() && xml_[pos_] == '\n')
                ++pos_;
            newline();
            return '\n';
        }
        if (c == '\n') {
            newline();
            return '\n';
        }
        ++col_;
        return c;
    }

    void advance(int n) {
        for (int i = 0; i < n && !at_end(); ++i)
            take();
    }

    void newline() {
        ++line_;
        col_ = 1;
    }

    void mark() {
        mark_line_ = line_;
        mark_col_ = col_;
    }

    XmlEvent make(XmlEvent::Kind kind) {
        XmlEvent e;
        e.kind = kind;
        e.span = Span{mark_line_, mark_col_, 1};
        return e;
    }

    XmlEvent error_event(std::string message) {
        error_message = std::move(message);
        XmlEvent e;
        e.kind = XmlEvent::Kind::Error;
        e.span = Span{line_, col_, 1};
        return e;
    }

    void skip_ws() {
        while (!at_end() && (xml_[pos_] == ' ' || xml_[pos_] == '\t' || xml_[pos_] == '\n' ||
                             xml_[pos_] == '\r'))
            take();
    }

    // Whitespace between tags, the XML declaration and comments carry no
    // model content.
    void skip_insignificant() {
        while (true) {
            std::size_t before = pos_;
            skip_ws();
            if (starts_with("<?")) {
                while (!at_end() && !starts_with("?>"))
                    take();
                advance(2);
            } else if (starts_with("<!--")) {
                while (!at_end() && !starts_with("-->"))
                    take();
                advance(3);
            } else if (pos_ == before) {
                return;
            }
        }
    }

    std::string read_name() {
        std::string name;
        while (!at_end()) {
            char c = xml_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.') {
                name += take();
            } else {
                break;
            }
        }
        return name;
    }

    std::string unescape(std::string_view text) {
        static constexpr std::pair<std::string_view, char> kEntities[] = {
            {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&apos;", '\''},
        };
        std::string out;
        out.reserve(text.size());
        for (std::size_t i = 0; i < text.size();) {
            bool matched = false;
            if (text[i] == '&') {
                for (auto [entity, ch] : kEntities) {
                    if (text.substr(i).starts_with(entity)) {
                        out += ch;
                        i += entity.size();
                        matched = true;
                        break;
                    }
                }
            }
            if (!matched)
                out += text[i++];
        }
        return out;
    }

    std::string_view xml_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    int mark_line_ = 1;
    int mark_col_ = 1;
};

// ---------------------------------------------------------------------------
// Reader: builds the model from scanner events with a container-tag stack
// ---------------------------------------------------------------------------

class Reader {
public:
    Reader(std::string_view xml, SchemaVersion version)
        : scanner_(xml), version_(version), registry_(MetamodelRegistry::for_version(version)) {}

    void run(Model& model) {
        model.version = version_;
        if (!expect_root())
            return;
        read_root_content(model);
        finish_references(model);
        diagnostics_out(model);
    }

    std::vector<Diagnostic> diagnostics;

private:
    void error(Span span, std::string message, std::string hint = {}) {
        diagnostics.push_back(
            Diagnostic::error(diag::syntax, span, std::move(message), std::move(hint)));
    }

    void illegal(Span span, std::string message, std::string hint = {}) {
        diagnostics.push_back(Diagnostic::error(diag::illegal_for_version, span,
                                                std::move(message), std::move(hint)));
    }

    XmlEvent next() { return scanner_.next(); }

    bool scan_error(const XmlEvent& e) {
        if (e.kind != XmlEvent::Kind::Error)
            return false;
        error(e.span, "malformed XML: " + scanner_.error_message);
        aborted_ = true;
        return true;
    }

    bool expect_root() {
        XmlEvent e = next();
        if (scan_error(e))
            return false;
        if (e.kind != XmlEvent::Kind::StartTag || e.name != kRootTag) {
            error(e.span, "expected <EAXML> document root");
            return false;
        }
        return !e.self_closing;
    }

    // <EAXML> holds an optional <TOP-LEVEL-PACKAGES> container.
    void read_root_content(Model& model) {
        while (!aborted_) {
            XmlEvent e = next();
            if (scan_error(e) || e.kind == XmlEvent::Kind::Eof)
                return;
            if (e.kind == XmlEvent::Kind::EndTag && e.name == kRootTag)
                return;
            if (e.kind == XmlEvent::Kind::StartTag && e.name == kTopLevelTag) {
                if (e.self_closing)
                    continue;
                read_package_list(model);
                continue;
            }
            if (e.kind == XmlEvent::Kind::Text) {
                error(e.span, "unexpected text content in <EAXML>");
                continue;
            }
            report_unknown_tag(e);
            if (e.kind == XmlEvent::Kind::StartTag && !e.self_closing)
                skip_subtree(e.name);
        }
    }

    void read_package_list(Model& model) {
        while (!aborted_) {
            XmlEvent e = next();
            if (scan_error(e))
                return;
            if (e.kind == XmlEvent::Kind::Eof) {
                error(e.span, "unexpected end of file; expected </TOP-LEVEL-PACKAGES>");
                return;
            }
            if (e.kind == XmlEvent::Kind::EndTag && e.name == kTopLevelTag)
                return;
            if (e.kind == XmlEvent::Kind::StartTag &&
                kind_from_xml_tag(e.name) == ElementKind::EAPackage) {
                model.roots.emplace_back();
                if (!read_element(model.roots.back(), ElementKind::EAPackage, e)) {
                    model.roots.pop_back();
                }
                continue;
            }
            if (e.kind == XmlEvent::Kind::Text) {
                error(e.span, "unexpected text content in <TOP-LEVEL-PACKAGES>");
                continue;
            }
            illegal(e.span, "only <EA-PACKAGE> is allowed in <TOP-LEVEL-PACKAGES> (got <" +
                                e.name + ">)");
            if (e.kind == XmlEvent::Kind::StartTag && !e.self_closing)
                skip_subtree(e.name);
        }
    }

    // Reads one element after its start tag; returns false when the element
    // had to be dropped (missing shortName).
    bool read_element(Element& element, ElementKind kind, const XmlEvent& open) {
        element.kind = kind;
        element.span = open.span;
        bool have_name = false;
        if (open.self_closing) {
            error(open.span, "element <" + open.name + "> is missing <SHORT-NAME>");
            return false;
        }
        while (!aborted_) {
            XmlEvent e = next();
            if (scan_error(e))
                return have_name;
            if (e.kind == XmlEvent::Kind::Eof) {
                error(e.span, "unexpected end of file; expected </" + open.name + ">");
                return have_name;
            }
            if (e.kind == XmlEvent::Kind::EndTag) {
                if (e.name != open.name) {
                    error(e.span, "mismatched closing tag </" + e.name + ">; expected </" +
                                      open.name + ">");
                    aborted_ = true;
                    return have_name;
                }
                if (!have_name)
                    error(open.span, "element <" + open.name + "> is missing <SHORT-NAME>");
                return have_name;
            }
            if (e.kind == XmlEvent::Kind::Text) {
                error(e.span, "unexpected text content in <" + open.name + ">");
                continue;
            }
            if (e.name == kShortNameTag) {
                std::string value;
                if (read_leaf_text(e, value)) {
                    if (!is_identifier(value)) {
                        illegal(e.span, "invalid shortName '" + value + "'");
                    }
                    element.short_name = value;
                    have_name = true;
                }
                continue;
            }
            if (!attribute_for_tag(e.name).empty()) {
                read_attribute_leaf(element, e);
                continue;
            }
            if (is_container_tag(e.name)) {
                if (e.self_closing)
                    continue;
                read_container(element, e);
                continue;
            }
            report_unknown_tag(e);
            if (!e.self_closing)
                skip_subtree(e.name);
        }
        return have_name;
    }

    void read_container(Element& parent, const XmlEvent& open) {
        while (!aborted_) {
            XmlEvent e = next();
            if (scan_error(e))
                return;
            if (e.kind == XmlEvent::Kind::Eof) {
                error(e.span, "unexpected end of file; expected </" + open.name + ">");
                return;
            }
            if (e.kind == XmlEvent::Kind::EndTag && e.name == open.name)
                return;
            if (e.kind == XmlEvent::Kind::Text) {
                error(e.span, "unexpected text content in <" + open.name + ">");
                continue;
            }
            if (e.kind == XmlEvent::Kind::EndTag) {
                error(e.span, "mismatched closing tag </" + e.name + ">");
                aborted_ = true;
                return;
            }
            std::optional<ElementKind> kind = kind_from_xml_tag(e.name);
            if (!kind || container_tag_for(*kind) != open.name) {
                if (!kind) {
                    report_unknown_tag(e);
                } else {
                    illegal(e.span, "<" + e.name + "> does not belong in <" + open.name + ">");
                }
                if (!e.self_closing)
                    skip_subtree(e.name);
                continue;
            }
            parent.children.emplace_back();
            if (!read_element(parent.children.back(), *kind, e))
                parent.children.pop_back();
        }
    }

    void read_attribute_leaf(Element& element, const XmlEvent& open) {
        std::string attr_name(attribute_for_tag(open.name));
        std::string value;
        if (!read_leaf_text(open, value))
            return;
        const AttributeSpec* spec = registry_.find_attribute(element.kind, attr_name);
        if (spec == nullptr) {
            if (registry_.known_in_other_version(element.kind, attr_name)) {
                illegal(open.span,
                        "attribute '" + attr_name + "' is not necessary for the current version (" +
                            std::string(version_.str()) + ")",
                        "run migrate to convert the model between versions");
            } else {
                illegal(open.span, "attribute '" + attr_name + "' is not defined for '" +
                                       std::string(keyword_of(element.kind)) + "' (version " +
                                       std::string(version_.str()) + ")");
            }
            return;
        }
        Attribute attr;
        attr.name = attr_name;
        attr.name_span = open.span;
        attr.value_span = open.span;
        switch (spec->shape) {
        case ValueShape::DirectionEnum: {
            std::optional<std::string> direction = direction_from_xml(value);
            if (!direction) {
                illegal(open.span, "<DIRECTION> expects IN, OUT or INOUT (got '" + value + "')");
                return;
            }
            attr.value = *direction;
            break;
        }
        case ValueShape::Reference: {
            std::optional<QualifiedRef> ref = QualifiedRef::from_eaxml(value);
            if (!ref) {
                illegal(open.span,
                        "<" + std::string(open.name) + "> expects an absolute path (got '" +
                            value + "')");
                return;
            }
            // Keep the slash form as an in-flight marker; finish_references
            // rewrites it once the whole tree is in place. Textual values can
            // never start with '/'.
            attr.value = ref->eaxml();
            has_absolute_refs_ = true;
            break;
        }
        case ValueShape::PortReference: {
            QualifiedRef ref = QualifiedRef::from_text(value);
            if (ref.segments.size() != 2 || !is_identifier(ref.segments[0]) ||
                !is_identifier(ref.segments[1])) {
                illegal(open.span, "<" + std::string(open.name) +
                                       "> expects a prototype.port pair (got '" + value + "')");
                return;
            }
            attr.value = value;
            break;
        }
        }
        element.attributes.push_back(std::move(attr));
    }

    bool read_leaf_text(const XmlEvent& open, std::string& value) {
        if (open.self_closing)
            return true;
        while (true) {
            XmlEvent e = next();
            if (scan_error(e))
                return false;
            if (e.kind == XmlEvent::Kind::Eof) {
                error(e.span, "unexpected end of file; expected </" + open.name + ">");
                return false;
            }
            if (e.kind == XmlEvent::Kind::Text) {
                value += e.text;
                continue;
            }
            if (e.kind == XmlEvent::Kind::EndTag && e.name == open.name)
                return true;
            error(e.span, "unexpected content in <" + open.name + ">");
            aborted_ = true;
            return false;
        }
    }

    void skip_subtree(const std::string& open_name) {
        int depth = 1;
        while (depth > 0 && !aborted_) {
            XmlEvent e = next();
            if (scan_error(e) || e.kind == XmlEvent::Kind::Eof)
                return;
            if (e.kind == XmlEvent::Kind::StartTag && !e.self_closing)
                ++depth;
            else if (e.kind == XmlEvent::Kind::EndTag)
                --depth;
        }
        (void)open_name;
    }

    void report_unknown_tag(const XmlEvent& e) {
        illegal(e.span, "unknown tag <" + e.name + "> (version " + std::string(version_.str()) +
                            ")");
    }

    // Absolute TREFs become the shortest textual suffix that still resolves
    // to the same element; unresolvable paths fall back to the full dotted
    // form and are left for validate to report.
    void finish_references(Model& model) {
        if (!has_absolute_refs_)
            return;
        ParentMap parents(model);
        for (Element& root : model.roots)
            finish_element_references(model, parents, root);
    }

    void finish_element_references(const Model& model, const ParentMap& parents,
                                   Element& element) {
        for (Attribute& attr : element.attributes) {
            if (attr.value.empty() || attr.value[0] != '/')
                continue;
            QualifiedRef absolute = *QualifiedRef::from_eaxml(attr.value);
            ResolveResult target = resolve(model, parents, absolute, nullptr);
            attr.value = target ? minimize_ref(model, parents, *target.element, &element)
                                : absolute.text();
        }
        for (Element& child : element.children)
            finish_element_references(model, parents, child);
    }

    void diagnostics_out(Model&) { sort_by_span(diagnostics); }

    XmlScanner scanner_;
    SchemaVersion version_;
    const MetamodelRegistry& registry_;
    bool has_absolute_refs_ = false;
    bool aborted_ = false;
};

std::string_view first_two_lines(std::string_view xml) {
    std::size_t first = xml.find('\n');
    if (first == std::string_view::npos)
        return xml;
    std::size_t second = xml.find('\n', first + 1);
    if (second == std::string_view::npos)
        return xml;
    return xml.substr(0, second);
}

} // namespace

VersionDetectResult detect_version(std::string_view xml) {
    VersionDetectResult result;
    std::string_view head = first_two_lines(xml);
    std::size_t at = head.find("xmlns=\"");
    if (at == std::string_view::npos) {
        result.diagnostics.push_back(Diagnostic::error(
            diag::schema_version_mismatch, Span{2, 1, 0},
            "no xmlns schema declaration found in the first two lines; supported: " +
                SchemaVersion::registered_ids()));
        return result;
    }
    std::size_t start = at + 7;
    std::size_t end = head.find('"', start);
    if (end == std::string_view::npos) {
        result.diagnostics.push_back(
            Diagnostic::error(diag::schema_version_mismatch, Span{2, 1, 0},
                              "garbled xmlns declaration; supported: " +
                                  SchemaVersion::registered_ids()));
        return result;
    }
    std::string_view uri = head.substr(start, end - start);
    if (!uri.starts_with(kXmlnsPrefix)) {
        result.diagnostics.push_back(Diagnostic::error(
            diag::schema_version_mismatch, Span{2, 1, 0},
            "unsupported schema namespace '" + std::string(uri) +
                "'; supported: " + SchemaVersion::registered_ids()));
        return result;
    }
    std::string_view id = uri.substr(kXmlnsPrefix.size());
    result.version = SchemaVersion::parse(id);
    if (!result.version) {
        result.diagnostics.push_back(Diagnostic::error(
            diag::schema_version_mismatch, Span{2, 1, 0},
            "unsupported schema version '" + std::string(id) +
                "'; supported: " + SchemaVersion::registered_ids()));
    }
    return result;
}

SerializeResult to_eaxml(const Model& model) { return Serializer(model).run(); }

LoadResult from_eaxml(std::string_view xml, std::optional<SchemaVersion> expected) {
    LoadResult result;
    VersionDetectResult detected = detect_version(xml);
    if (!detected.version) {
        result.diagnostics = std::move(detected.diagnostics);
        result.version = expected.value_or(SchemaVersion::latest());
        result.model.version = result.version;
        return result;
    }
    result.version = *detected.version;
    if (expected && *expected != result.version) {
        result.diagnostics.push_back(Diagnostic::error(
            diag::schema_version_mismatch, Span{2, 1, 0},
            "file declares schema " + std::string(result.version.str()) + " but tool expects " +
                std::string(expected->str()) + "; run migrate"));
    }
    Reader reader(xml, result.version);
    reader.run(result.model);
    append(result.diagnostics, std::move(reader.diagnostics));
    return result;
}

} // namespace eatxt
