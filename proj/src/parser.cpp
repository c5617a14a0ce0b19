#include "eatxt/parser.hpp"

#include <sstream>

#include "eatxt/lexer.hpp"
#include "eatxt/registry.hpp"
#include "levenshtein.hpp"

namespace eatxt {

std::optional<std::string> keyword_suggest(std::string_view word,
                                           std::span<const std::string_view> candidates) {
    return detail::suggest(word, candidates);
}

namespace {

class Parser {
public:
    Parser(std::string_view source, SchemaVersion version)
        : version_(version), registry_(MetamodelRegistry::for_version(version)) {
        LexResult lexed = lex(source);
        tokens_ = std::move(lexed.tokens);
        diagnostics_ = std::move(lexed.diagnostics);
    }

    ParseResult run() {
        Model model;
        model.version = version_;
        std::vector<std::string> pending;
        leading_sink_ = &pending;
        while (true) {
            Token& t = peek();
            if (t.kind == TokenKind::Eof) {
                route_comments(t);
                model.end_comments = std::move(pending);
                break;
            }
            if (t.kind == TokenKind::Keyword) {
                if (auto element = parse_element(pending, std::nullopt))
                    model.roots.push_back(std::move(*element));
                leading_sink_ = &pending;
                continue;
            }
            if (t.kind == TokenKind::Identifier) {
                report_unknown_keyword(t, std::nullopt);
                recover_unknown_element();
                continue;
            }
            error(t.span, "unexpected '" + t.text + "'; expected one of: " +
                              expected_kinds_text(std::nullopt));
            advance();
        }
        return ParseResult{std::move(model), std::move(diagnostics_)};
    }

private:
    Token& peek(std::size_t ahead = 0) {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    Token& advance() {
        Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size())
            ++pos_;
        route_comments(t);
        prev_end_line_ = t.span.line;
        return t;
    }

    // Own-line comments accumulate in the current leading sink; a comment on
    // the same line as the end of the previous statement is claimed by that
    // statement via take_trailing() before the token is consumed.
    void route_comments(Token& t) {
        if (leading_sink_ == nullptr) {
            t.comments.clear();
            return;
        }
        for (CommentTrivia& c : t.comments)
            leading_sink_->push_back(std::move(c.text));
        t.comments.clear();
    }

    void take_trailing(Comments& comments) {
        Token& next = peek();
        if (!next.comments.empty() && next.comments.front().span.line == prev_end_line_ &&
            !comments.trailing.has_value()) {
            comments.trailing = std::move(next.comments.front().text);
            next.comments.erase(next.comments.begin());
        }
    }

    void error(Span span, std::string message, std::string hint = {}) {
        diagnostics_.push_back(
            Diagnostic::error(diag::syntax, span, std::move(message), std::move(hint)));
    }

    std::vector<std::string_view> legal_kind_words(std::optional<ElementKind> container) const {
        auto kinds = container ? registry_.children_of(*container) : registry_.root_kinds();
        std::vector<std::string_view> words;
        for (ElementKind kind : kinds)
            words.push_back(keyword_of(kind));
        return words;
    }

    std::string expected_kinds_text(std::optional<ElementKind> container) const {
        std::vector<std::string_view> words = legal_kind_words(container);
        std::string out;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i > 0)
                out += ", ";
            out += words[i];
        }
        return out;
    }

    void report_unknown_keyword(const Token& t, std::optional<ElementKind> container) {
        std::vector<std::string_view> words = legal_kind_words(container);
        std::ostringstream msg;
        msg << "unknown keyword '" << t.text << "'";
        if (words.empty()) {
            msg << "; '" << keyword_of(*container) << "' takes no child elements";
        } else {
            msg << "; expected one of: " << expected_kinds_text(container);
        }
        std::optional<std::string> suggestion = detail::suggest(t.text, words);
        if (!suggestion && words.size() == 1)
            suggestion = std::string(words.front()); // only one keyword is legal here
        std::string hint;
        if (suggestion)
            hint = "did you mean the element keyword '" + *suggestion + "'?";
        diagnostics_.push_back(
            Diagnostic::error(diag::unknown_keyword, t.span, msg.str(), std::move(hint)));
    }

    // Consumes a misspelled element (IDENT [IDENT] followed by ';' or a brace
    // block) without further diagnostics; the statement is dropped.
    void recover_unknown_element() {
        advance(); // the unknown word
        if (peek().kind == TokenKind::Identifier)
            advance(); // the name
        if (peek().is_punct(';')) {
            advance();
            return;
        }
        if (!peek().is_punct('{'))
            return;
        advance();
        int depth = 1;
        while (depth > 0 && peek().kind != TokenKind::Eof) {
            Token& t = advance();
            if (t.is_punct('{'))
                ++depth;
            else if (t.is_punct('}'))
                --depth;
        }
    }

    // Skips to the next ';' (consumed), or stops before '}' / a keyword /
    // end of file, whichever comes first.
    void skip_to_sync() {
        while (true) {
            Token& t = peek();
            if (t.kind == TokenKind::Eof || t.kind == TokenKind::Keyword || t.is_punct('}'))
                return;
            advance();
            if (t.is_punct(';'))
                return;
        }
    }

    std::optional<Element> parse_element(std::vector<std::string>& pending,
                                         std::optional<ElementKind> container) {
        Element element;
        element.comments.leading = std::move(pending);
        pending.clear();
        std::vector<std::string>* saved_sink = leading_sink_;
        leading_sink_ = &element.comments.leading;

        Token& kw = advance();
        element.kind = *kind_from_keyword(kw.text);
        element.span = kw.span;

        if (peek().kind != TokenKind::Identifier) {
            error(peek().span, "unexpected '" + describe(peek()) +
                                   "'; expected an identifier (element name) after '" + kw.text +
                                   "'");
            skip_to_sync();
            leading_sink_ = saved_sink;
            return std::nullopt;
        }
        element.short_name = advance().text;

        if (peek().is_punct(';')) {
            advance();
            take_trailing(element.comments);
        } else if (peek().is_punct('{')) {
            advance();
            take_trailing(element.comments);
            parse_body(element);
        } else {
            error(peek().span,
                  "unexpected '" + describe(peek()) + "'; expected '{' or ';' after '" +
                      kw.text + " " + element.short_name + "'");
            skip_to_sync();
        }
        leading_sink_ = saved_sink;
        return element;
    }

    void parse_body(Element& element) {
        std::vector<std::string> pending;
        std::vector<std::string>* saved_sink = leading_sink_;
        leading_sink_ = &pending;
        while (true) {
            Token& t = peek();
            if (t.kind == TokenKind::Eof) {
                error(t.span, "unexpected end of file; expected '}'");
                route_comments(t);
                element.end_comments = std::move(pending);
                break;
            }
            if (t.is_punct('}')) {
                advance();
                element.end_comments = std::move(pending);
                take_trailing(element.comments);
                break;
            }
            if (t.kind == TokenKind::Keyword) {
                if (auto child = parse_element(pending, element.kind))
                    element.children.push_back(std::move(*child));
                leading_sink_ = &pending;
                continue;
            }
            if (t.kind == TokenKind::Identifier) {
                if (looks_like_misspelled_element(element.kind)) {
                    report_unknown_keyword(t, element.kind);
                    recover_unknown_element();
                    continue;
                }
                parse_attribute(element, pending);
                leading_sink_ = &pending;
                continue;
            }
            error(t.span, "unexpected '" + describe(t) + "'; " + expected_in_body(element.kind));
            advance();
            skip_to_sync();
        }
        leading_sink_ = saved_sink;
    }

    // Distinguishes a mistyped element keyword from an attribute. Attribute
    // names never take a brace block, and a name close to a legal child kind
    // that is not a known attribute reads as a typo.
    bool looks_like_misspelled_element(ElementKind container) {
        const Token& name = peek();
        const Token& second = peek(1);
        if (second.is_punct('{'))
            return true;
        if (second.kind == TokenKind::Identifier && peek(2).is_punct('{'))
            return true;
        if (second.kind == TokenKind::Identifier && peek(2).is_punct(';')) {
            if (registry_.find_attribute(container, name.text) != nullptr ||
                registry_.known_in_other_version(container, name.text))
                return false;
            return detail::suggest(name.text, legal_kind_words(container)).has_value();
        }
        return false;
    }

    std::string expected_in_body(ElementKind container) {
        std::string out = "expected one of: ";
        std::string kinds = expected_kinds_text(container);
        if (!kinds.empty())
            out += kinds + ", ";
        if (!registry_.attributes_of(container).empty() ||
            registry_.known_in_other_version(container, "hardwareComponent"))
            out += "an attribute name, ";
        out += "or '}'";
        return out;
    }

    void parse_attribute(Element& element, std::vector<std::string>& pending) {
        Attribute attr;
        attr.comments.leading = std::move(pending);
        pending.clear();
        std::vector<std::string>* saved_sink = leading_sink_;
        leading_sink_ = &attr.comments.leading;

        Token& name = advance();
        name.kind = TokenKind::AttrName;
        attr.name = name.text;
        attr.name_span = name.span;

        if (peek().kind != TokenKind::Identifier) {
            error(peek().span, "unexpected '" + describe(peek()) +
                                   "'; expected a value (identifier or dotted path) after "
                                   "attribute '" +
                                   attr.name + "'");
            skip_to_sync();
            leading_sink_ = saved_sink;
            return; // attribute dropped, siblings unaffected
        }
        Token& first = advance();
        attr.value = first.text;
        Span value_span = first.span;
        while (peek().is_punct('.')) {
            advance();
            if (peek().kind != TokenKind::Identifier) {
                error(peek().span, "unexpected '" + describe(peek()) +
                                       "'; expected an identifier after '.' in a dotted path");
                skip_to_sync();
                leading_sink_ = saved_sink;
                return;
            }
            Token& segment = advance();
            attr.value += ".";
            attr.value += segment.text;
            if (segment.span.line == value_span.line)
                value_span.length = segment.span.column + segment.span.length - value_span.column;
        }
        attr.value_span = value_span;

        if (!peek().is_punct(';')) {
            error(peek().span, "unexpected '" + describe(peek()) + "'; expected ';' after '" +
                                   attr.name + " " + attr.value + "'");
            skip_to_sync();
        } else {
            advance();
            take_trailing(attr.comments);
        }
        element.attributes.push_back(std::move(attr));
        leading_sink_ = saved_sink;
    }

    static std::string describe(const Token& t) {
        return t.kind == TokenKind::Eof ? "end of file" : t.text;
    }

    SchemaVersion version_;
    const MetamodelRegistry& registry_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diagnostics_;
    std::vector<std::string>* leading_sink_ = nullptr;
    int prev_end_line_ = 0;
};

} // namespace

ParseResult parse(std::string_view source, SchemaVersion version) {
    return Parser(source, version).run();
}

} // namespace eatxt
