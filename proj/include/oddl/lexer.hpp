// Copyright 2026 The ODDL Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file lexer.hpp
/// @brief Tokenizer for ODDL source text.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oddl/source.hpp"

namespace oddl {

enum class TokenKind : std::uint8_t {
  Keyword,
  Ident,
  FloatLit,
  StringLit,
  BoolLit,
  Punct,
  Annotation,
  Comment,
  Eof,
};

inline std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "KEYWORD";
    case TokenKind::Ident: return "IDENT";
    case TokenKind::FloatLit: return "FLOAT_LIT";
    case TokenKind::StringLit: return "STRING_LIT";
    case TokenKind::BoolLit: return "BOOL_LIT";
    case TokenKind::Punct: return "PUNCT";
    case TokenKind::Annotation: return "ANNOTATION";
    case TokenKind::Comment: return "COMMENT";
    case TokenKind::Eof: return "EOF";
  }
  return "?";
}

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string lexeme;  ///< Exact source text; string literals keep their quotes.
  SourceSpan span;

  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
  bool operator==(const Token&) const = default;
};

inline constexpr std::array<std::string_view, 6> kKeywords = {
    "module", "import", "const", "typealias", "class", "new"};

namespace detail {

inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view source, std::string file_uri)
      : src_(source), uri_(std::move(file_uri)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_whitespace();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    out.push_back(Token{TokenKind::Eof, "", span_at(pos_, line_, column_, 0)});
    return out;
  }

 private:
  SourceSpan span_at(std::size_t offset, std::size_t line, std::size_t column,
                     std::size_t length) const {
    return SourceSpan{uri_, line, column, length, offset};
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_whitespace() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r' || src_[pos_] == '\n'))
      advance();
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  Token make(TokenKind kind, std::size_t start, std::size_t line, std::size_t column) const {
    return Token{kind, std::string(src_.substr(start, pos_ - start)),
                 span_at(start, line, column, pos_ - start)};
  }

  Token next() {
    const std::size_t start = pos_;
    const std::size_t line = line_;
    const std::size_t column = column_;
    const char c = peek();

    if (c == '#' || (c == '/' && peek(1) == '/')) {
      while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      return make(TokenKind::Comment, start, line, column);
    }
    if (c == '"') return string_literal(start, line, column);
    if (is_digit(c)) {
      while (is_digit(peek())) advance();
      if (peek() == '.' && is_digit(peek(1))) {
        advance();
        while (is_digit(peek())) advance();
      }
      if ((peek() == 'e' || peek() == 'E') &&
          (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
        advance();
        if (!is_digit(peek())) advance();
        while (is_digit(peek())) advance();
      }
      return make(TokenKind::FloatLit, start, line, column);
    }
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) advance();
      Token tok = make(TokenKind::Ident, start, line, column);
      if (tok.lexeme == "true" || tok.lexeme == "false") {
        tok.kind = TokenKind::BoolLit;
      } else {
        for (auto kw : kKeywords)
          if (tok.lexeme == kw) tok.kind = TokenKind::Keyword;
      }
      return tok;
    }
    if (c == '@' && is_ident_start(peek(1))) {
      advance();
      while (is_ident_char(peek())) advance();
      return make(TokenKind::Annotation, start, line, column);
    }
    constexpr std::string_view punct = "=:{}(),|.;-";
    if (punct.find(c) != std::string_view::npos) {
      advance();
      return make(TokenKind::Punct, start, line, column);
    }
    std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                            ? "byte 0x" + hex(static_cast<unsigned char>(c))
                            : std::string("'") + c + "'";
    throw LexicalError("illegal character " + shown, span_at(start, line, column, 1));
  }

  Token string_literal(std::size_t start, std::size_t line, std::size_t column) {
    advance();  // opening quote
    for (;;) {
      if (pos_ >= src_.size() || src_[pos_] == '\n')
        throw LexicalError("unterminated string literal", span_at(start, line, column, pos_ - start));
      const char c = src_[pos_];
      if (c == '"') {
        advance();
        return make(TokenKind::StringLit, start, line, column);
      }
      if (c == '\\') {
        const char escaped = peek(1);
        if (escaped != '"' && escaped != '\\')
          throw LexicalError("unsupported escape sequence in string literal",
                             span_at(pos_, line_, column_, 2));
        advance();
      }
      advance();
    }
  }

  static std::string hex(unsigned char byte) {
    constexpr char digits[] = "0123456789abcdef";
    return {digits[byte >> 4], digits[byte & 0xf]};
  }

  std::string_view src_;
  std::string uri_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace detail

/// Splits `source` into tokens. Whitespace is skipped; comments are kept as
/// COMMENT tokens. The last token is always EOF.
inline std::vector<Token> tokenize(std::string_view source, const std::string& file_uri) {
  return detail::Lexer(source, file_uri).run();
}

/// Decodes the lexeme of a STRING_LIT token (quotes removed, escapes applied).
inline std::string decode_string_literal(std::string_view lexeme) {
  std::string out;
  if (lexeme.size() < 2) return out;
  for (std::size_t i = 1; i + 1 < lexeme.size(); ++i) {
    if (lexeme[i] == '\\' && i + 2 < lexeme.size()) ++i;
    out.push_back(lexeme[i]);
  }
  return out;
}

inline std::string quote_string(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace oddl
