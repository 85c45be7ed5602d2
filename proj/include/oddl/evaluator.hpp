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

/// @file evaluator.hpp
/// @brief Instantiation, amendment and constraint checking.
///
/// An instance is evaluated by walking its target class: each property takes
/// the amended value when one is given, its default otherwise, and class-typed
/// properties recurse with the nested amendment block. Amendments may only
/// override declared properties. Every defect is collected; evaluation never
/// stops at the first one.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddl/schema.hpp"
#include "oddl/semver.hpp"
#include "oddl/violation.hpp"

namespace oddl {

/// VERSION_GATE when `declared` is newer than `tool_version`; TYPE_MISMATCH
/// when either string is not a semantic version.
inline std::optional<Violation> check_version_gate(const std::optional<std::string>& declared,
                                                   std::string_view tool_version,
                                                   const SourceSpan& site = {}) {
  if (!declared) return std::nullopt;
  Violation v;
  v.decl_site = site;
  auto required = parse_semver(*declared);
  auto running = parse_semver(tool_version);
  if (!required || !running) {
    v.kind = ViolationKind::TypeMismatch;
    v.offending_value = required ? std::string(tool_version) : *declared;
    v.message = "malformed version string \"" + v.offending_value + "\"";
    return v;
  }
  if (*required > *running) {
    v.kind = ViolationKind::VersionGate;
    v.offending_value = *declared;
    v.message = "module requires tool version " + *declared + " but this is " +
                std::string(tool_version);
    return v;
  }
  return std::nullopt;
}

namespace detail {

inline std::string join_path(const std::string& prefix, std::string_view name) {
  return prefix.empty() ? std::string(name) : prefix + "." + std::string(name);
}

inline std::string literal_kind(const Literal& lit) {
  if (lit.is_float()) return "Float";
  if (lit.is_bool()) return "Boolean";
  return "String";
}

class Amender {
 public:
  std::vector<Violation> take() { return std::move(violations_); }

  /// Builds an object of `cls` from defaults plus `block`.
  Value instantiate(const ResolvedClass& cls, const AmendmentBlock* block, const std::string& path,
                    const SourceSpan& site) {
    std::vector<std::pair<std::string, Value>> members;
    for (const auto& prop : cls.properties) {
      const AmendmentEntry* entry = block ? block->find(prop.name()) : nullptr;
      const std::string child_path = join_path(path, prop.name());
      switch (prop.kind) {
        case PropertyKind::Object: {
          const AmendmentBlock* nested = nullptr;
          if (entry && !entry->is_block())
            mismatch(cls, prop, *entry, child_path, "expected an amendment block");
          else if (entry)
            nested = &std::get<AmendmentBlock>(entry->value);
          members.emplace_back(prop.name(), instantiate(*prop.cls, nested, child_path,
                                                        nested ? nested->span : site));
          break;
        }
        case PropertyKind::Listing:
          if (entry) {
            if (auto listing = build_listing(cls, prop, *entry, child_path))
              members.emplace_back(prop.name(), std::move(*listing));
          } else {
            members.emplace_back(prop.name(), Value::listing({}));
          }
          break;
        default:
          if (entry) {
            if (auto leaf = build_leaf(cls, prop, *entry, child_path))
              members.emplace_back(prop.name(), std::move(*leaf));
          } else if (prop.default_value) {
            members.emplace_back(prop.name(), *prop.default_value);
          } else {
            Violation v = base(ViolationKind::MissingRequired, cls, prop, child_path);
            v.message = "Missing required property '" + prop.name() + "'.";
            v.use_site = site;
            violations_.push_back(std::move(v));
          }
      }
    }
    if (block) reject_unknown(cls, *block, path);
    return Value::object(cls.qualified_name(), std::move(members));
  }

  /// Applies `block` on top of an existing object of class `cls`.
  Value amend(const Value& object, const ResolvedClass& cls, const AmendmentBlock& block,
              const std::string& path) {
    Value result = object;
    for (const auto& entry : block.entries) {
      const ResolvedProperty* prop = cls.find(entry.name);
      if (!prop) continue;  // reported by reject_unknown
      const std::string child_path = join_path(path, entry.name);
      switch (prop->kind) {
        case PropertyKind::Object: {
          if (!entry.is_block()) {
            mismatch(cls, *prop, entry, child_path, "expected an amendment block");
            break;
          }
          const Value* current = object.member(entry.name);
          Value child = current ? amend(*current, *prop->cls, std::get<AmendmentBlock>(entry.value),
                                        child_path)
                                : instantiate(*prop->cls, &std::get<AmendmentBlock>(entry.value),
                                              child_path, entry.span);
          result = result.with_member(entry.name, std::move(child));
          break;
        }
        case PropertyKind::Listing:
          if (auto listing = build_listing(cls, *prop, entry, child_path))
            result = result.with_member(entry.name, std::move(*listing));
          break;
        default:
          if (auto leaf = build_leaf(cls, *prop, entry, child_path))
            result = result.with_member(entry.name, std::move(*leaf));
      }
    }
    reject_unknown(cls, block, path);
    return result;
  }

 private:
  Violation base(ViolationKind kind, const ResolvedClass& cls, const ResolvedProperty& prop,
                 const std::string& path) const {
    Violation v;
    v.kind = kind;
    v.property_path = path;
    v.owner = cls.owner_of(prop);
    v.decl_site = prop.decl->span;
    return v;
  }

  void mismatch(const ResolvedClass& cls, const ResolvedProperty& prop, const AmendmentEntry& entry,
                const std::string& path, const std::string& detail) {
    Violation v = base(ViolationKind::TypeMismatch, cls, prop, path);
    v.message = "Type mismatch for '" + prop.name() + "' (declared " +
                prop.decl->declared_type.name + "): " + detail + ".";
    if (const auto* lit = std::get_if<Literal>(&entry.value)) v.offending_value = literal_text(*lit);
    v.use_site = entry.span;
    violations_.push_back(std::move(v));
  }

  std::optional<Value> build_leaf(const ResolvedClass& cls, const ResolvedProperty& prop,
                                  const AmendmentEntry& entry, const std::string& path) {
    const auto* lit = std::get_if<Literal>(&entry.value);
    if (!lit) {
      mismatch(cls, prop, entry, path, "expected a literal, found an amendment block");
      return std::nullopt;
    }
    if (auto leaf = Schema::leaf_from_literal(prop, *lit)) return leaf;
    if (prop.kind == PropertyKind::Enum && lit->is_string()) {
      Violation v = base(ViolationKind::EnumOutOfRange, cls, prop, path);
      v.offending_value = literal_text(*lit);
      std::string alts;
      for (const auto& a : prop.alias->decl->alternatives)
        alts += (alts.empty() ? "" : " | ") + quote_string(a);
      v.message = "Value " + v.offending_value + " is not one of " + alts + ".";
      v.use_site = lit->span;
      violations_.push_back(std::move(v));
      return std::nullopt;
    }
    mismatch(cls, prop, entry, path, "found " + literal_kind(*lit) + " " + literal_text(*lit));
    violations_.back().use_site = lit->span;
    return std::nullopt;
  }

  std::optional<Value> build_listing(const ResolvedClass& cls, const ResolvedProperty& prop,
                                     const AmendmentEntry& entry, const std::string& path) {
    const auto* block = std::get_if<AmendmentBlock>(&entry.value);
    if (!block) {
      mismatch(cls, prop, entry, path, "expected a block of 'new { ... }' elements");
      return std::nullopt;
    }
    for (const auto& stray : block->entries) {
      Violation v = base(ViolationKind::TypeMismatch, cls, prop, join_path(path, stray.name));
      v.message = "Listing '" + prop.name() + "' only accepts 'new { ... }' elements.";
      v.use_site = stray.span;
      violations_.push_back(std::move(v));
    }
    std::vector<Value> records;
    for (const auto& element : block->elements) {
      std::vector<std::pair<std::string, Value>> fields;
      for (const auto& field : element.fields) {
        const auto& raw = field.value.value;
        if (const auto* d = std::get_if<double>(&raw)) fields.emplace_back(field.name, Value::floating(*d));
        else if (const auto* b = std::get_if<bool>(&raw)) fields.emplace_back(field.name, Value::boolean(*b));
        else fields.emplace_back(field.name, Value::string(std::get<std::string>(raw)));
      }
      records.push_back(Value::object("", std::move(fields)));
    }
    return Value::listing(std::move(records));
  }

  void reject_unknown(const ResolvedClass& cls, const AmendmentBlock& block, const std::string& path) {
    for (const auto& entry : block.entries) {
      if (cls.find(entry.name)) continue;
      Violation v;
      v.kind = ViolationKind::UnknownProperty;
      v.property_path = join_path(path, entry.name);
      v.owner = cls.qualified_name();
      v.decl_site = cls.decl->span;
      v.use_site = entry.span;
      v.message = "Cannot find property '" + entry.name + "' in class '" + cls.name() +
                  "'; amendments may only override declared properties.";
      violations_.push_back(std::move(v));
    }
    if (!block.elements.empty()) {
      Violation v;
      v.kind = ViolationKind::TypeMismatch;
      v.property_path = path;
      v.owner = cls.qualified_name();
      v.decl_site = cls.decl->span;
      v.use_site = block.elements.front().span;
      v.message = "Listing elements are not allowed in an amendment of class '" + cls.name() + "'.";
      violations_.push_back(std::move(v));
    }
  }

  std::vector<Violation> violations_;
};

inline void check_object(const Value& tree, const Schema& schema, const ConstEnv& consts,
                         const std::string& path, std::vector<Violation>& out) {
  const ResolvedClass* cls = schema.find_class(tree.as_object().class_name);
  if (!cls) return;
  for (const auto& prop : cls->properties) {
    const Value* child = tree.member(prop.name());
    if (!child) continue;
    const std::string child_path = join_path(path, prop.name());

    if (prop.kind == PropertyKind::Object && child->is_object()) {
      check_object(*child, schema, consts, child_path, out);
    } else if (prop.kind == PropertyKind::Listing && child->is_listing()) {
      const auto& records = child->as_listing().records;
      for (std::size_t i = 0; i < records.size(); ++i) {
        const Value* p = records[i].member("probability");
        if (!p) continue;
        Violation v;
        v.property_path = child_path + "[" + std::to_string(i) + "].probability";
        v.owner = cls->owner_of(prop);
        v.decl_site = prop.decl->span;
        if (p->kind() != ValueKind::Float) {
          v.kind = ViolationKind::TypeMismatch;
          v.offending_value = leaf_text(*p);
          v.message = "Listing field 'probability' must be a Float.";
          out.push_back(std::move(v));
        } else if (double pr = p->as_float().value; !(pr >= 0.0 && pr <= 1.0)) {
          v.kind = ViolationKind::ProbabilityRange;
          v.offending_value = format_float(pr);
          v.constraint_text = "isBetween(0, 1)";
          v.message = "Probability must lie within [0, 1].";
          out.push_back(std::move(v));
        }
      }
    } else if (prop.kind == PropertyKind::Float && prop.decl->constraint &&
               child->kind() == ValueKind::Float) {
      const ConstraintExpr& expr = *prop.decl->constraint;
      Violation v;
      v.property_path = child_path;
      v.owner = cls->owner_of(prop);
      v.decl_site = prop.decl->span;
      v.highlight = expr.span;
      v.constraint_text = expr.source_text;

      auto low = consts.resolve(expr.low);
      auto high = consts.resolve(expr.high);
      if (!low || !high || !low->is_float() || !high->is_float()) {
        v.kind = ViolationKind::TypeMismatch;
        const ValueRef& bad = (!low || !low->is_float()) ? expr.low : expr.high;
        v.message = (low && high ? "constraint bound " + value_ref_text(bad) + " is not a Float"
                                 : "unresolved constant '" + value_ref_text(bad) + "'") +
                    " in '" + expr.source_text + "'.";
        out.push_back(std::move(v));
        continue;
      }
      const double lo = std::get<double>(low->value);
      const double hi = std::get<double>(high->value);
      if (lo > hi) {
        v.kind = ViolationKind::TypeMismatch;
        v.message = "constraint '" + expr.source_text + "' has its lower bound above its upper bound.";
        out.push_back(std::move(v));
        continue;
      }
      const double value = child->as_float().value;
      if (!(value >= lo && value <= hi)) {
        v.kind = ViolationKind::ConstraintViolated;
        v.offending_value = format_float(value);
        v.message = "Type constraint '" + expr.source_text + "' violated.";
        out.push_back(std::move(v));
      }
    }
  }
}

/// Finds the amendment entry that wrote `path`, for use-site reporting.
inline const AmendmentEntry* entry_at(const AmendmentBlock& block, std::string_view path) {
  const AmendmentBlock* current = &block;
  const AmendmentEntry* entry = nullptr;
  while (current && !path.empty()) {
    const auto dot = path.find('.');
    entry = current->find(path.substr(0, dot));
    if (!entry) return nullptr;
    path = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
    current = std::get_if<AmendmentBlock>(&entry->value);
  }
  return path.empty() ? entry : nullptr;
}

inline void attach_use_sites(std::vector<Violation>& violations, const AmendmentBlock& block) {
  for (auto& v : violations) {
    if (v.use_site || v.kind != ViolationKind::ConstraintViolated) continue;
    if (const AmendmentEntry* e = entry_at(block, v.property_path))
      if (const auto* lit = std::get_if<Literal>(&e->value)) v.use_site = lit->span;
  }
}

}  // namespace detail

/// One CONSTRAINT_VIOLATED per Float outside its inclusive isBetween range
/// and one PROBABILITY_RANGE per listing record whose probability is outside
/// [0, 1]. Comparison is exact.
inline std::vector<Violation> check_constraints(const Value& tree, const Schema& schema,
                                                const ConstEnv& consts) {
  std::vector<Violation> out;
  if (tree.is_object()) detail::check_object(tree, schema, consts, "", out);
  return out;
}

inline std::vector<Violation> check_constraints(const Value& tree, const Schema& schema) {
  return check_constraints(tree, schema, schema.consts());
}

/// Object of class `cls` built from its defaults and `block`, constraint-checked.
inline EvalResult instantiate(const Schema& schema, const ResolvedClass& cls,
                              const AmendmentBlock& block = {}, const SourceSpan& site = {}) {
  detail::Amender amender;
  Value tree = amender.instantiate(cls, &block, "", site.file_uri.empty() ? block.span : site);
  auto violations = amender.take();
  auto constraint_violations = check_constraints(tree, schema);
  detail::attach_use_sites(constraint_violations, block);
  violations.insert(violations.end(), constraint_violations.begin(), constraint_violations.end());
  if (!violations.empty()) return violations;
  return tree;
}

/// A new tree equal to `base` except for the amended paths. `base` is left
/// untouched. Only declared properties can be amended.
inline EvalResult amend(const Value& base, const AmendmentBlock& block, const Schema& schema) {
  const ResolvedClass* cls = base.is_object() ? schema.find_class(base.as_object().class_name) : nullptr;
  if (!cls) throw SchemaError("tree was not produced from this schema");
  detail::Amender amender;
  Value tree = amender.amend(base, *cls, block, "");
  auto violations = amender.take();
  auto constraint_violations = check_constraints(tree, schema);
  detail::attach_use_sites(constraint_violations, block);
  violations.insert(violations.end(), constraint_violations.begin(), constraint_violations.end());
  if (!violations.empty()) return violations;
  return tree;
}

/// Evaluation context for one ModuleGraph.
class Evaluator {
 public:
  explicit Evaluator(const ModuleGraph& graph) : schema_(Schema::build(graph)) {}

  const Schema& schema() const { return schema_; }

  std::vector<std::string> instance_names() const {
    std::vector<std::string> names;
    for (const auto& inst : schema_.graph().entry().ast.instances) names.push_back(inst.name);
    return names;
  }

  EvalResult evaluate(std::string_view instance_name,
                      std::string_view tool_version = kToolVersion) const {
    const ModuleGraph& graph = schema_.graph();
    std::vector<Violation> violations;
    for (const auto& m : graph)
      if (auto gate = check_version_gate(m->ast.min_tool_version, tool_version,
                                         m->ast.annotation_span)) {
        gate->owner = m->ast.module_name;
        violations.push_back(std::move(*gate));
      }
    violations.insert(violations.end(), schema_.problems().begin(), schema_.problems().end());

    const InstanceDecl* inst = graph.entry().ast.find_instance(instance_name);
    if (!inst)
      throw SchemaError("no instance named '" + std::string(instance_name) + "' in " +
                        graph.entry().ast.module_name);
    const ResolvedClass& cls = schema_.instance_class(*inst);
    EvalResult result = instantiate(schema_, cls, inst->amendment, inst->span);
    violations.insert(violations.end(), result.violations().begin(), result.violations().end());
    if (!violations.empty()) return violations;
    return result.value();
  }

  EvalResult amend(const Value& base, const AmendmentBlock& block) const {
    return oddl::amend(base, block, schema_);
  }

 private:
  Schema schema_;
};

inline EvalResult evaluate(const ModuleGraph& graph, std::string_view instance_name,
                           std::string_view tool_version = kToolVersion) {
  return Evaluator(graph).evaluate(instance_name, tool_version);
}

}  // namespace oddl
