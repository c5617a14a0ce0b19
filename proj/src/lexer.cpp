#include "eatxt/lexer.hpp"

#include <cctype>

#include "eatxt/model.hpp"

namespace eatxt {

namespace {

bool is_word_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_punct_char(char c) { return c == '{' || c == '}' || c == ';' || c == '.'; }

class Lexer {
public:
    explicit Lexer(std::string_view source) : source_(source) {}

    LexResult run() {
        while (true) {
            skip_trivia();
            if (at_end()) {
                emit(TokenKind::Eof, pos_, "");
                break;
            }
            std::size_t start = pos_;
            char c = source_[pos_];
            if (is_word_start(c)) {
                while (!at_end() && is_word_char(source_[pos_]))
                    advance();
                std::string_view word = source_.substr(start, pos_ - start);
                TokenKind kind =
                    kind_from_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
                emit(kind, start, word);
            } else if (is_punct_char(c)) {
                advance();
                emit(TokenKind::Punct, start, source_.substr(start, 1));
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                while (!at_end() && is_word_char(source_[pos_]))
                    advance();
                diagnostics_.push_back(Diagnostic::error(
                    diag::syntax, span_from(start),
                    "identifier cannot start with a digit: '" +
                        std::string(source_.substr(start, pos_ - start)) + "'"));
                trivia_ += source_.substr(start, pos_ - start);
            } else {
                advance();
                diagnostics_.push_back(
                    Diagnostic::error(diag::syntax, span_from(start),
                                      "unexpected character '" + std::string(1, c) + "'"));
                trivia_ += source_.substr(start, 1);
            }
        }
        return LexResult{std::move(tokens_), std::move(diagnostics_)};
    }

private:
    bool at_end() const { return pos_ >= source_.size(); }

    // Advances one byte, counting CRLF as a single line break.
    void advance() {
        char c = source_[pos_++];
        if (c == '\r') {
            if (pos_ < source_.size() && source_[pos_] == '\n')
                ++pos_;
            newline();
        } else if (c == '\n') {
            newline();
        } else {
            ++column_;
        }
    }

    void newline() {
        ++line_;
        column_ = 1;
    }

    Span span_from(std::size_t start) {
        return Span{start_line_, start_column_, static_cast<int>(pos_ - start)};
    }

    void mark_start() {
        start_line_ = line_;
        start_column_ = column_;
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = source_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                trivia_ += c == '\r' && pos_ + 1 < source_.size() && source_[pos_ + 1] == '\n'
                               ? "\r\n"
                               : std::string(1, c);
                advance();
            } else if (c == '/' && pos_ + 1 < source_.size() && source_[pos_ + 1] == '/') {
                mark_start();
                std::size_t start = pos_;
                while (!at_end() && source_[pos_] != '\n' && source_[pos_] != '\r')
                    advance();
                std::string_view raw = source_.substr(start, pos_ - start);
                trivia_ += raw;
                while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t'))
                    raw.remove_suffix(1);
                comments_.push_back(CommentTrivia{std::string(raw), span_from(start)});
            } else {
                break;
            }
        }
        mark_start();
    }

    void emit(TokenKind kind, std::size_t offset, std::string_view text) {
        Token token;
        token.kind = kind;
        token.text = std::string(text);
        token.span = kind == TokenKind::Eof ? Span{line_, column_, 0} : span_from(offset);
        token.offset = offset;
        token.leading_trivia = std::move(trivia_);
        token.comments = std::move(comments_);
        trivia_.clear();
        comments_.clear();
        tokens_.push_back(std::move(token));
        mark_start();
    }

    std::string_view source_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    int start_line_ = 1;
    int start_column_ = 1;
    std::string trivia_;
    std::vector<CommentTrivia> comments_;
    std::vector<Token> tokens_;
    std::vector<Diagnostic> diagnostics_;
};

} // namespace

LexResult lex(std::string_view source) { return Lexer(source).run(); }

std::string detokenize(const std::vector<Token>& tokens) {
    std::string out;
    for (const Token& token : tokens) {
        out += token.leading_trivia;
        out += token.text;
    }
    return out;
}

} // namespace eatxt
