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

/// @file ast.hpp
/// @brief Syntax tree of an ODDL module.
///
/// Every node keeps the span of the token that names it so diagnostics can
/// point back into the source. Structural comparison (`same_structure`)
/// ignores spans.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oddl/source.hpp"

namespace oddl {

/// A literal as written in source: a Float, String or Boolean.
struct Literal {
  std::variant<double, std::string, bool> value;
  SourceSpan span;

  bool is_float() const { return std::holds_alternative<double>(value); }
  bool is_string() const { return std::holds_alternative<std::string>(value); }
  bool is_bool() const { return std::holds_alternative<bool>(value); }
};

struct ConstRef {
  std::string name;
  SourceSpan span;
};

/// Either a literal or a reference to a `const`.
using ValueRef = std::variant<Literal, ConstRef>;

inline const SourceSpan& span_of(const ValueRef& ref) {
  return std::visit([](const auto& r) -> const SourceSpan& { return r.span; }, ref);
}

enum class BuiltinType : std::uint8_t { Float, Boolean, String, Listing, Named };

struct TypeRef {
  BuiltinType builtin = BuiltinType::Named;
  std::string name;  ///< Dotted name as written (also set for builtins).
  SourceSpan span;
};

enum class ConstraintKind : std::uint8_t { IsBetween };

struct ConstraintExpr {
  ConstraintKind kind = ConstraintKind::IsBetween;
  ValueRef low;
  ValueRef high;
  std::string source_text;  ///< Verbatim, e.g. "isBetween(0, speed_limit_global)".
  SourceSpan span;          ///< Covers exactly source_text.
};

struct PropertyDecl {
  std::string name;
  TypeRef declared_type;
  std::optional<ConstraintExpr> constraint;
  std::optional<ValueRef> default_value;
  SourceSpan span;  ///< The property name.
};

struct ClassDecl {
  std::string name;
  std::vector<PropertyDecl> properties;
  SourceSpan span;

  const PropertyDecl* find(std::string_view property) const {
    auto it = std::find_if(properties.begin(), properties.end(),
                           [&](const PropertyDecl& p) { return p.name == property; });
    return it == properties.end() ? nullptr : &*it;
  }
};

struct ConstDecl {
  std::string name;
  Literal value;
  SourceSpan span;
};

struct TypeAliasDecl {
  std::string name;
  std::vector<std::string> alternatives;
  SourceSpan span;
};

/// One `name = value` inside a `new { ... }` listing element.
struct RecordField {
  std::string name;
  Literal value;
  SourceSpan span;
};

struct RecordElement {
  std::vector<RecordField> fields;
  SourceSpan span;
};

struct AmendmentEntry;

/// Body of `new { ... }` or of a nested `name { ... }` block.
struct AmendmentBlock {
  std::vector<AmendmentEntry> entries;
  std::vector<RecordElement> elements;  ///< Only meaningful for Listing targets.
  SourceSpan span;                      ///< The opening brace.

  bool empty() const { return entries.empty() && elements.empty(); }
  inline const AmendmentEntry* find(std::string_view name) const;
};

struct AmendmentEntry {
  std::string name;
  std::variant<Literal, AmendmentBlock> value;
  SourceSpan span;  ///< The entry name.

  bool is_block() const { return std::holds_alternative<AmendmentBlock>(value); }
};

inline const AmendmentEntry* AmendmentBlock::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

struct InstanceDecl {
  std::string name;
  std::string target_type;
  SourceSpan target_span;
  AmendmentBlock amendment;
  SourceSpan span;
};

struct ImportDecl {
  std::string path;  ///< As written, e.g. "scen_template.pkl".
  SourceSpan span;
};

struct ModuleAst {
  std::string module_name;
  SourceSpan module_span;
  std::optional<std::string> min_tool_version;
  SourceSpan annotation_span;
  std::vector<ImportDecl> imports;
  std::vector<ConstDecl> consts;
  std::vector<TypeAliasDecl> type_aliases;
  std::vector<ClassDecl> classes;
  std::vector<InstanceDecl> instances;
  std::string source_uri;

  const ClassDecl* find_class(std::string_view name) const {
    for (const auto& c : classes)
      if (c.name == name) return &c;
    return nullptr;
  }
  const TypeAliasDecl* find_alias(std::string_view name) const {
    for (const auto& a : type_aliases)
      if (a.name == name) return &a;
    return nullptr;
  }
  const InstanceDecl* find_instance(std::string_view name) const {
    for (const auto& i : instances)
      if (i.name == name) return &i;
    return nullptr;
  }
};

// Structural equality: same declarations and values, spans ignored.

inline bool same_structure(const Literal& a, const Literal& b) { return a.value == b.value; }

inline bool same_structure(const ValueRef& a, const ValueRef& b) {
  if (a.index() != b.index()) return false;
  if (const auto* la = std::get_if<Literal>(&a)) return same_structure(*la, std::get<Literal>(b));
  return std::get<ConstRef>(a).name == std::get<ConstRef>(b).name;
}

inline bool same_structure(const AmendmentBlock& a, const AmendmentBlock& b) {
  if (a.entries.size() != b.entries.size() || a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& ea = a.entries[i];
    const auto& eb = b.entries[i];
    if (ea.name != eb.name || ea.value.index() != eb.value.index()) return false;
    if (ea.is_block()) {
      if (!same_structure(std::get<AmendmentBlock>(ea.value), std::get<AmendmentBlock>(eb.value)))
        return false;
    } else if (!same_structure(std::get<Literal>(ea.value), std::get<Literal>(eb.value))) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    const auto& fa = a.elements[i].fields;
    const auto& fb = b.elements[i].fields;
    if (fa.size() != fb.size()) return false;
    for (std::size_t j = 0; j < fa.size(); ++j)
      if (fa[j].name != fb[j].name || !same_structure(fa[j].value, fb[j].value)) return false;
  }
  return true;
}

inline bool same_structure(const PropertyDecl& a, const PropertyDecl& b) {
  if (a.name != b.name || a.declared_type.builtin != b.declared_type.builtin ||
      a.declared_type.name != b.declared_type.name)
    return false;
  if (a.constraint.has_value() != b.constraint.has_value()) return false;
  if (a.constraint &&
      (a.constraint->source_text != b.constraint->source_text ||
       !same_structure(a.constraint->low, b.constraint->low) ||
       !same_structure(a.constraint->high, b.constraint->high)))
    return false;
  if (a.default_value.has_value() != b.default_value.has_value()) return false;
  return !a.default_value || same_structure(*a.default_value, *b.default_value);
}

inline bool same_structure(const ModuleAst& a, const ModuleAst& b) {
  if (a.module_name != b.module_name || a.min_tool_version != b.min_tool_version) return false;
  auto eq_seq = [](const auto& xs, const auto& ys, auto&& eq) {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!eq(xs[i], ys[i])) return false;
    return true;
  };
  return eq_seq(a.imports, b.imports,
                [](const auto& x, const auto& y) { return x.path == y.path; }) &&
         eq_seq(a.consts, b.consts,
                [](const auto& x, const auto& y) {
                  return x.name == y.name && same_structure(x.value, y.value);
                }) &&
         eq_seq(a.type_aliases, b.type_aliases,
                [](const auto& x, const auto& y) {
                  return x.name == y.name && x.alternatives == y.alternatives;
                }) &&
         eq_seq(a.classes, b.classes,
                [&](const ClassDecl& x, const ClassDecl& y) {
                  return x.name == y.name &&
                         eq_seq(x.properties, y.properties, [](const auto& p, const auto& q) {
                           return same_structure(p, q);
                         });
                }) &&
         eq_seq(a.instances, b.instances, [](const InstanceDecl& x, const InstanceDecl& y) {
           return x.name == y.name && x.target_type == y.target_type &&
                  same_structure(x.amendment, y.amendment);
         });
}

}  // namespace oddl
