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

/// @file parser.hpp
/// @brief Recursive-descent parser producing a ModuleAst.
///
/// Grammar:
///
///     module     := annotation? ("module" dotted)? import* decl*
///     annotation := "@ModuleInfo" "{" ("minToolVersion" | "minPklVersion") "=" STRING "}"
///     import     := "import" STRING
///     decl       := const | typealias | class | instance
///     const      := "const" IDENT "=" literal
///     typealias  := "typealias" IDENT "=" STRING ("|" STRING)*
///     class      := "class" IDENT "{" property* "}"
///     property   := IDENT ":" typeref constraint? ("=" (literal | IDENT))?
///     typeref    := "Float" | "Boolean" | "String" | "Listing" | dotted
///     constraint := "(" "isBetween" "(" arg "," arg ")" ")"
///     instance   := IDENT ":" dotted "=" "new" block
///     block      := "{" ((IDENT "=" literal | IDENT block | element) ";"?)* "}"
///     element    := "new" "{" (IDENT "=" literal ";"?)* "}"
///     literal    := "-"? FLOAT | STRING | BOOL
///
/// Without a `module` clause the module is named after the file stem.

#pragma once

#include <charconv>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oddl/ast.hpp"
#include "oddl/lexer.hpp"

namespace oddl {

namespace detail {

inline std::string stem_of_uri(std::string_view uri) {
  auto slash = uri.find_last_of('/');
  std::string_view file = slash == std::string_view::npos ? uri : uri.substr(slash + 1);
  auto dot = file.find('.');
  return std::string(file.substr(0, dot));
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::string_view source) : source_(source) {
    for (const auto& t : tokens)
      if (t.kind != TokenKind::Comment) toks_.push_back(t);
    if (toks_.empty() || toks_.back().kind != TokenKind::Eof)
      throw SyntaxError("token sequence must end with EOF");
  }

  ModuleAst module() {
    ModuleAst ast;
    ast.source_uri = toks_.back().span.file_uri;
    ast.module_name = stem_of_uri(ast.source_uri);
    ast.module_span = toks_.front().span;

    if (peek().kind == TokenKind::Annotation) annotation(ast);
    if (peek().is(TokenKind::Keyword, "module")) {
      advance();
      ast.module_span = peek().span;
      ast.module_name = dotted_name();
    }
    while (peek().is(TokenKind::Keyword, "import")) {
      advance();
      const Token& path = expect(TokenKind::StringLit, "import path string");
      ast.imports.push_back(ImportDecl{decode_string_literal(path.lexeme), path.span});
    }

    std::set<std::string> names;
    auto declare = [&](const std::string& name, const SourceSpan& span) {
      if (!names.insert(name).second)
        throw SyntaxError("duplicate declaration '" + name + "'", span);
    };

    while (peek().kind != TokenKind::Eof) {
      const Token& t = peek();
      if (t.is(TokenKind::Keyword, "const")) {
        ast.consts.push_back(const_decl());
        declare(ast.consts.back().name, ast.consts.back().span);
      } else if (t.is(TokenKind::Keyword, "typealias")) {
        ast.type_aliases.push_back(type_alias());
        declare(ast.type_aliases.back().name, ast.type_aliases.back().span);
      } else if (t.is(TokenKind::Keyword, "class")) {
        ast.classes.push_back(class_decl());
        declare(ast.classes.back().name, ast.classes.back().span);
      } else if (t.kind == TokenKind::Ident) {
        ast.instances.push_back(instance());
        declare(ast.instances.back().name, ast.instances.back().span);
      } else if (t.is(TokenKind::Keyword, "import")) {
        throw SyntaxError("imports must precede all declarations", t.span);
      } else {
        fail("declaration");
      }
    }
    return ast;
  }

  AmendmentBlock standalone_block() {
    AmendmentBlock b = block();
    expect(TokenKind::Eof, "end of input");
    return b;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& advance() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::string_view expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::Eof
                            ? "end of input"
                            : std::string(to_string(t.kind)) + " '" + t.lexeme + "'";
    throw SyntaxError("expected " + std::string(expected) + ", found " + found, t.span);
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (peek().kind != kind) fail(what);
    return advance();
  }
  const Token& expect_punct(std::string_view p) {
    if (!peek().is(TokenKind::Punct, p)) fail("'" + std::string(p) + "'");
    return advance();
  }
  bool accept_punct(std::string_view p) {
    if (!peek().is(TokenKind::Punct, p)) return false;
    advance();
    return true;
  }

  /// Raises the unclosed-brace error when a block body runs into EOF or into
  /// a top-level keyword.
  void check_unclosed(const Token& open) const {
    const Token& t = peek();
    const bool top_level_kw =
        t.kind == TokenKind::Keyword && t.lexeme != "new";
    if (t.kind == TokenKind::Eof || top_level_kw || t.kind == TokenKind::Annotation)
      throw SyntaxError("unclosed '{' opened at line " + std::to_string(open.span.line) +
                            ", column " + std::to_string(open.span.column),
                        open.span);
  }

  std::string dotted_name() {
    std::string name = expect(TokenKind::Ident, "identifier").lexeme;
    while (peek().is(TokenKind::Punct, ".") && peek(1).kind == TokenKind::Ident) {
      advance();
      name += "." + advance().lexeme;
    }
    return name;
  }

  void annotation(ModuleAst& ast) {
    const Token& at = advance();
    if (at.lexeme != "@ModuleInfo") throw SyntaxError("unknown annotation '" + at.lexeme + "'", at.span);
    const Token& open = expect_punct("{");
    const Token& key = expect(TokenKind::Ident, "'minToolVersion'");
    if (key.lexeme != "minToolVersion" && key.lexeme != "minPklVersion")
      throw SyntaxError("unknown @ModuleInfo key '" + key.lexeme + "'", key.span);
    expect_punct("=");
    const Token& version = expect(TokenKind::StringLit, "version string");
    check_unclosed_punct(open);
    ast.min_tool_version = decode_string_literal(version.lexeme);
    ast.annotation_span = version.span;
  }

  void check_unclosed_punct(const Token& open) {
    if (!peek().is(TokenKind::Punct, "}")) {
      check_unclosed(open);
      fail("'}'");
    }
    advance();
  }

  Literal literal() {
    const Token& t = peek();
    if (t.is(TokenKind::Punct, "-") && peek(1).kind == TokenKind::FloatLit) {
      advance();
      const Token& num = advance();
      SourceSpan span = t.span;
      span.length = num.span.offset + num.span.length - t.span.offset;
      return Literal{-to_double(num), span};
    }
    switch (t.kind) {
      case TokenKind::FloatLit: advance(); return Literal{to_double(t), t.span};
      case TokenKind::StringLit: advance(); return Literal{decode_string_literal(t.lexeme), t.span};
      case TokenKind::BoolLit: advance(); return Literal{t.lexeme == "true", t.span};
      default: fail("literal");
    }
  }

  static double to_double(const Token& t) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), v);
    if (ec != std::errc{} || ptr != t.lexeme.data() + t.lexeme.size())
      throw SyntaxError("malformed number '" + t.lexeme + "'", t.span);
    return v;
  }

  ValueRef literal_or_ident() {
    if (peek().kind == TokenKind::Ident) {
      const Token& t = advance();
      return ConstRef{t.lexeme, t.span};
    }
    return literal();
  }

  ValueRef constraint_arg() {
    if (peek().kind == TokenKind::Ident) {
      const Token& t = advance();
      return ConstRef{t.lexeme, t.span};
    }
    if (peek().kind == TokenKind::FloatLit || peek().is(TokenKind::Punct, "-")) return literal();
    fail("number or constant name");
  }

  ConstDecl const_decl() {
    advance();
    const Token& name = expect(TokenKind::Ident, "constant name");
    expect_punct("=");
    return ConstDecl{name.lexeme, literal(), name.span};
  }

  TypeAliasDecl type_alias() {
    advance();
    const Token& name = expect(TokenKind::Ident, "type alias name");
    expect_punct("=");
    TypeAliasDecl decl{name.lexeme, {}, name.span};
    do {
      const Token& alt = expect(TokenKind::StringLit, "string alternative");
      std::string value = decode_string_literal(alt.lexeme);
      if (std::find(decl.alternatives.begin(), decl.alternatives.end(), value) !=
          decl.alternatives.end())
        throw SyntaxError("duplicate alternative " + alt.lexeme + " in type alias '" + name.lexeme + "'",
                          alt.span);
      decl.alternatives.push_back(std::move(value));
    } while (accept_punct("|"));
    return decl;
  }

  ClassDecl class_decl() {
    advance();
    const Token& name = expect(TokenKind::Ident, "class name");
    ClassDecl decl{name.lexeme, {}, name.span};
    const Token& open = expect_punct("{");
    for (;;) {
      if (accept_punct("}")) break;
      check_unclosed(open);
      PropertyDecl prop = property();
      if (decl.find(prop.name))
        throw SyntaxError("duplicate property '" + prop.name + "' in class '" + decl.name + "'",
                          prop.span);
      decl.properties.push_back(std::move(prop));
    }
    return decl;
  }

  PropertyDecl property() {
    const Token& name = expect(TokenKind::Ident, "property name or '}'");
    PropertyDecl prop;
    prop.name = name.lexeme;
    prop.span = name.span;
    expect_punct(":");
    prop.declared_type = type_ref();
    if (peek().is(TokenKind::Punct, "(")) prop.constraint = constraint();
    if (accept_punct("=")) prop.default_value = literal_or_ident();
    return prop;
  }

  TypeRef type_ref() {
    TypeRef ref;
    ref.span = peek().span;
    ref.name = dotted_name();
    ref.span.length = ref.name.size();
    if (ref.name == "Float") ref.builtin = BuiltinType::Float;
    else if (ref.name == "Boolean") ref.builtin = BuiltinType::Boolean;
    else if (ref.name == "String") ref.builtin = BuiltinType::String;
    else if (ref.name == "Listing") ref.builtin = BuiltinType::Listing;
    return ref;
  }

  ConstraintExpr constraint() {
    expect_punct("(");
    const Token& fn = expect(TokenKind::Ident, "'isBetween'");
    if (fn.lexeme != "isBetween")
      throw SyntaxError("unsupported constraint '" + fn.lexeme + "' (only isBetween is available)",
                        fn.span);
    expect_punct("(");
    ConstraintExpr expr;
    expr.low = constraint_arg();
    expect_punct(",");
    expr.high = constraint_arg();
    const Token& close = expect_punct(")");
    expect_punct(")");

    expr.span = fn.span;
    expr.span.length = close.span.offset + close.span.length - fn.span.offset;
    if (!source_.empty()) {
      expr.source_text = span_text(source_, expr.span);
    } else {
      expr.source_text = "isBetween(" + arg_text(expr.low) + ", " + arg_text(expr.high) + ")";
    }
    return expr;
  }

  static std::string arg_text(const ValueRef& ref);

  InstanceDecl instance() {
    const Token& name = advance();
    InstanceDecl decl;
    decl.name = name.lexeme;
    decl.span = name.span;
    expect_punct(":");
    decl.target_span = peek().span;
    decl.target_type = dotted_name();
    decl.target_span.length = decl.target_type.size();
    expect_punct("=");
    if (!peek().is(TokenKind::Keyword, "new")) fail("'new'");
    advance();
    decl.amendment = block();
    return decl;
  }

  AmendmentBlock block() {
    const Token& open = expect_punct("{");
    AmendmentBlock b;
    b.span = open.span;
    for (;;) {
      if (accept_punct("}")) break;
      if (accept_punct(";")) continue;
      if (peek().is(TokenKind::Keyword, "new")) {
        b.elements.push_back(element());
        continue;
      }
      check_unclosed(open);
      const Token& name = expect(TokenKind::Ident, "property name, 'new' or '}'");
      if (b.find(name.lexeme))
        throw SyntaxError("duplicate amendment of '" + name.lexeme + "'", name.span);
      if (accept_punct("=")) {
        b.entries.push_back(AmendmentEntry{name.lexeme, literal(), name.span});
      } else if (peek().is(TokenKind::Punct, "{")) {
        b.entries.push_back(AmendmentEntry{name.lexeme, block(), name.span});
      } else {
        fail("'=' or '{'");
      }
    }
    return b;
  }

  RecordElement element() {
    const Token& kw = advance();
    RecordElement el;
    el.span = kw.span;
    const Token& open = expect_punct("{");
    for (;;) {
      if (accept_punct("}")) break;
      if (accept_punct(";")) continue;
      check_unclosed(open);
      const Token& name = expect(TokenKind::Ident, "field name or '}'");
      for (const auto& f : el.fields)
        if (f.name == name.lexeme)
          throw SyntaxError("duplicate field '" + name.lexeme + "' in listing element", name.span);
      expect_punct("=");
      el.fields.push_back(RecordField{name.lexeme, literal(), name.span});
    }
    return el;
  }

  std::vector<Token> toks_;
  std::string_view source_;
  std::size_t pos_ = 0;
};

}  // namespace detail

}  // namespace oddl

#include "oddl/format.hpp"

namespace oddl {

inline std::string literal_text(const Literal& lit) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_float(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return quote_string(v);
      },
      lit.value);
}

inline std::string value_ref_text(const ValueRef& ref) {
  if (const auto* c = std::get_if<ConstRef>(&ref)) return c->name;
  return literal_text(std::get<Literal>(ref));
}

inline std::string detail::Parser::arg_text(const ValueRef& ref) { return value_ref_text(ref); }

/// Parses a token stream. When `source` is supplied, constraint texts are
/// sliced verbatim from it; otherwise they are rebuilt from the tokens.
inline ModuleAst parse_module(const std::vector<Token>& tokens, std::string_view source = {}) {
  return detail::Parser(tokens, source).module();
}

inline ModuleAst parse_source(std::string_view source, const std::string& file_uri) {
  return parse_module(tokenize(source, file_uri), source);
}

/// Parses a bare `{ ... }` amendment block.
inline AmendmentBlock parse_amendment(std::string_view source,
                                      const std::string& file_uri = "inline:amendment") {
  return detail::Parser(tokenize(source, file_uri), source).standalone_block();
}

}  // namespace oddl
