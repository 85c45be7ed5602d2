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

/// @file schema.hpp
/// @brief Name resolution over a ModuleGraph.
///
/// Schema links every property to its resolved type (builtin, alias or
/// class), resolves defaults against the constant environment and rejects
/// structurally broken templates. Structural faults throw SchemaError;
/// faults in individual defaults are collected as violations in problems().

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oddl/imports.hpp"
#include "oddl/value.hpp"
#include "oddl/violation.hpp"

namespace oddl {

/// Constants of every module in a graph, in declaration order.
class ConstEnv {
 public:
  struct Entry {
    std::string name;
    Literal value;
    std::string module_name;
  };

  /// Adds a constant; throws SchemaError when the name is already bound.
  void add(const ConstDecl& decl, const std::string& module_name) {
    if (const Entry* prior = find(decl.name))
      throw SchemaError("constant '" + decl.name + "' is declared in both " + prior->module_name +
                            " and " + module_name,
                        decl.span);
    entries_.push_back(Entry{decl.name, decl.value, module_name});
  }

  const Entry* find(std::string_view name) const {
    for (const auto& e : entries_)
      if (e.name == name) return &e;
    return nullptr;
  }

  /// The literal behind a value reference, or nullopt for unbound names.
  std::optional<Literal> resolve(const ValueRef& ref) const {
    if (const auto* lit = std::get_if<Literal>(&ref)) return *lit;
    if (const Entry* e = find(std::get<ConstRef>(ref).name)) return e->value;
    return std::nullopt;
  }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

enum class PropertyKind : std::uint8_t { Float, Boolean, String, Enum, Listing, Object };

inline std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Float: return "Float";
    case PropertyKind::Boolean: return "Boolean";
    case PropertyKind::String: return "String";
    case PropertyKind::Enum: return "String alias";
    case PropertyKind::Listing: return "Listing";
    case PropertyKind::Object: return "object";
  }
  return "?";
}

struct ResolvedAlias {
  std::string qualified_name;
  const TypeAliasDecl* decl = nullptr;

  bool admits(std::string_view value) const {
    for (const auto& alt : decl->alternatives)
      if (alt == value) return true;
    return false;
  }
};

struct ResolvedClass;

struct ResolvedProperty {
  const PropertyDecl* decl = nullptr;
  PropertyKind kind = PropertyKind::Float;
  const ResolvedAlias* alias = nullptr;
  const ResolvedClass* cls = nullptr;
  std::optional<Value> default_value;
  std::optional<FloatBounds> bounds;  ///< Resolved isBetween interval, when well-formed.

  const std::string& name() const { return decl->name; }
  bool is_leaf() const { return kind != PropertyKind::Object && kind != PropertyKind::Listing; }
};

struct ResolvedClass {
  std::string module_name;
  const ClassDecl* decl = nullptr;
  std::vector<ResolvedProperty> properties;

  const std::string& name() const { return decl->name; }
  std::string qualified_name() const { return module_name + "#" + decl->name; }
  std::string owner_of(const ResolvedProperty& p) const { return qualified_name() + "." + p.name(); }

  const ResolvedProperty* find(std::string_view property) const {
    for (const auto& p : properties)
      if (p.name() == property) return &p;
    return nullptr;
  }
};

class Schema {
 public:
  Schema(const Schema&) = delete;
  Schema& operator=(const Schema&) = delete;
  Schema(Schema&&) = default;
  Schema& operator=(Schema&&) = default;

  static Schema build(const ModuleGraph& graph) {
    Schema s(graph);
    s.collect();
    s.link();
    s.check_containment_cycles();
    return s;
  }

  const ModuleGraph& graph() const { return graph_; }
  const ConstEnv& consts() const { return consts_; }
  const std::vector<Violation>& problems() const { return problems_; }
  const std::vector<std::unique_ptr<ResolvedClass>>& classes() const { return classes_; }

  const ResolvedClass* find_class(std::string_view qualified_name) const {
    for (const auto& c : classes_)
      if (c->qualified_name() == qualified_name) return c.get();
    return nullptr;
  }

  /// Class named by a (possibly qualified) type reference written in `from`.
  const ResolvedClass& resolve_class(const LoadedModule& from, std::string_view dotted,
                                     const SourceSpan& site) const {
    auto [cls, alias] = lookup(from, dotted, site);
    if (!cls) throw SchemaError("'" + std::string(dotted) + "' is not a class", site);
    return *cls;
  }

  /// Class targeted by an instance declared in the entry module.
  const ResolvedClass& instance_class(const InstanceDecl& instance) const {
    return resolve_class(graph_.entry(), instance.target_type, instance.target_span);
  }

 private:
  explicit Schema(const ModuleGraph& graph) : graph_(graph) {}

  void collect() {
    for (const auto& m : graph_) {
      for (const auto& c : m->ast.consts) consts_.add(c, m->ast.module_name);
      for (const auto& a : m->ast.type_aliases)
        aliases_.push_back(std::make_unique<ResolvedAlias>(
            ResolvedAlias{m->ast.module_name + "#" + a.name, &a}));
      for (const auto& c : m->ast.classes) {
        auto cls = std::make_unique<ResolvedClass>();
        cls->module_name = m->ast.module_name;
        cls->decl = &c;
        classes_.push_back(std::move(cls));
      }
    }
  }

  std::pair<const ResolvedClass*, const ResolvedAlias*> lookup(const LoadedModule& from,
                                                               std::string_view dotted,
                                                               const SourceSpan& site) const {
    std::string module_name = from.ast.module_name;
    std::string_view name = dotted;
    if (auto dot = dotted.find('.'); dot != std::string_view::npos) {
      const std::string qualifier(dotted.substr(0, dot));
      name = dotted.substr(dot + 1);
      auto it = from.import_aliases.find(qualifier);
      if (it == from.import_aliases.end() || name.find('.') != std::string_view::npos)
        throw SchemaError("unknown type '" + std::string(dotted) + "'", site);
      module_name = it->second;
    }
    const std::string qualified = module_name + "#" + std::string(name);
    if (const ResolvedClass* c = find_class(qualified)) return {c, nullptr};
    for (const auto& a : aliases_)
      if (a->qualified_name == qualified) return {nullptr, a.get()};
    throw SchemaError("unknown type '" + std::string(dotted) + "'", site);
  }

  void problem(ViolationKind kind, std::string message, const ResolvedClass& cls,
               const ResolvedProperty& prop, const SourceSpan& site) {
    Violation v;
    v.kind = kind;
    v.message = std::move(message);
    v.owner = cls.owner_of(prop);
    v.decl_site = prop.decl->span;
    v.highlight = site;
    problems_.push_back(std::move(v));
  }

  void link() {
    for (auto& cls : classes_) {
      const LoadedModule& from = *graph_.find(cls->module_name);
      for (const auto& decl : cls->decl->properties) {
        ResolvedProperty prop;
        prop.decl = &decl;
        switch (decl.declared_type.builtin) {
          case BuiltinType::Float: prop.kind = PropertyKind::Float; break;
          case BuiltinType::Boolean: prop.kind = PropertyKind::Boolean; break;
          case BuiltinType::String: prop.kind = PropertyKind::String; break;
          case BuiltinType::Listing: prop.kind = PropertyKind::Listing; break;
          case BuiltinType::Named: {
            auto [c, a] = lookup(from, decl.declared_type.name, decl.declared_type.span);
            prop.kind = c ? PropertyKind::Object : PropertyKind::Enum;
            prop.cls = c;
            prop.alias = a;
            break;
          }
        }
        if (decl.constraint) {
          if (prop.kind != PropertyKind::Float)
            problem(ViolationKind::TypeMismatch, "constraints are only allowed on Float properties",
                    *cls, prop, decl.constraint->span);
          else
            prop.bounds = resolve_bounds(*decl.constraint, consts_);
        }
        if (decl.default_value) link_default(*cls, prop, *decl.default_value);
        cls->properties.push_back(std::move(prop));
      }
    }
  }

 public:
  /// The interval of an isBetween constraint; nullopt when an argument is
  /// not a bound Float constant or the bounds are out of order.
  static std::optional<FloatBounds> resolve_bounds(const ConstraintExpr& expr, const ConstEnv& env) {
    auto low = env.resolve(expr.low);
    auto high = env.resolve(expr.high);
    if (!low || !high || !low->is_float() || !high->is_float()) return std::nullopt;
    FloatBounds b{std::get<double>(low->value), std::get<double>(high->value)};
    if (b.low > b.high) return std::nullopt;
    return b;
  }

 private:
  void link_default(const ResolvedClass& cls, ResolvedProperty& prop, const ValueRef& ref) {
    const SourceSpan& site = span_of(ref);
    if (!prop.is_leaf()) {
      problem(ViolationKind::TypeMismatch,
              "property '" + prop.name() + "' of type " + std::string(to_string(prop.kind)) +
                  " cannot have a default value",
              cls, prop, site);
      return;
    }
    auto lit = consts_.resolve(ref);
    if (!lit) {
      problem(ViolationKind::TypeMismatch,
              "unresolved constant '" + std::get<ConstRef>(ref).name + "'", cls, prop, site);
      return;
    }
    auto value = leaf_from_literal(prop, *lit);
    if (!value) {
      const bool enum_miss = prop.kind == PropertyKind::Enum && lit->is_string();
      problem(enum_miss ? ViolationKind::EnumOutOfRange : ViolationKind::TypeMismatch,
              "default value " + literal_text(*lit) + " does not match declared type " +
                  prop.decl->declared_type.name,
              cls, prop, site);
      problems_.back().offending_value = literal_text(*lit);
      return;
    }
    prop.default_value = std::move(*value);
  }

 public:
  /// Builds the leaf for `prop` from a literal; nullopt on a type mismatch
  /// or an enum value outside the alias.
  static std::optional<Value> leaf_from_literal(const ResolvedProperty& prop, const Literal& lit) {
    switch (prop.kind) {
      case PropertyKind::Float:
        if (lit.is_float()) return Value::floating(std::get<double>(lit.value), prop.bounds);
        break;
      case PropertyKind::Boolean:
        if (lit.is_bool()) return Value::boolean(std::get<bool>(lit.value));
        break;
      case PropertyKind::String:
        if (lit.is_string()) return Value::string(std::get<std::string>(lit.value));
        break;
      case PropertyKind::Enum:
        if (lit.is_string() && prop.alias->admits(std::get<std::string>(lit.value)))
          return Value::enumeration(std::get<std::string>(lit.value), prop.alias->qualified_name);
        break;
      default: break;
    }
    return std::nullopt;
  }

 private:
  void check_containment_cycles() const {
    std::set<const ResolvedClass*> done;
    std::vector<const ResolvedClass*> stack;
    std::function<void(const ResolvedClass*, const SourceSpan&)> visit =
        [&](const ResolvedClass* cls, const SourceSpan& site) {
          if (std::find(stack.begin(), stack.end(), cls) != stack.end())
            throw SchemaError("class '" + cls->qualified_name() + "' contains itself", site);
          if (done.count(cls)) return;
          stack.push_back(cls);
          for (const auto& p : cls->properties)
            if (p.cls) visit(p.cls, p.decl->span);
          stack.pop_back();
          done.insert(cls);
        };
    for (const auto& c : classes_) visit(c.get(), c->decl->span);
  }

  ModuleGraph graph_;
  ConstEnv consts_;
  std::vector<std::unique_ptr<ResolvedAlias>> aliases_;
  std::vector<std::unique_ptr<ResolvedClass>> classes_;
  std::vector<Violation> problems_;
};

}  // namespace oddl
