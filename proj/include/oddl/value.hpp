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

/// @file value.hpp
/// @brief Immutable evaluated values.
///
/// A Value is a shared, read-only node. "Modifying" a value builds a new
/// node and shares every untouched child with the original, so a tree that
/// has been handed out can never change underneath its holder.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "oddl/format.hpp"

namespace oddl {

class Value;

/// Closed interval from a resolved isBetween constraint.
struct FloatBounds {
  double low = 0;
  double high = 0;
  bool operator==(const FloatBounds&) const = default;
};

struct FloatLeaf {
  double value = 0;
  std::optional<FloatBounds> bounds;
};

struct BoolLeaf {
  bool value = false;
};

struct StringLeaf {
  std::string value;
};

/// A string restricted to the alternatives of a type alias.
struct EnumLeaf {
  std::string value;
  std::string alias;  ///< Qualified alias name, e.g. "ODD.scen_template#Direction_of_travel".
};

/// Ordered members of an instance of `class_name`. Listing records use an
/// empty class name.
struct ObjectNode {
  std::string class_name;
  std::vector<std::pair<std::string, Value>> members;
};

struct ListingNode {
  std::vector<Value> records;
};

enum class ValueKind : std::uint8_t { Object, Float, Bool, String, Enum, Listing };

using Node = std::variant<ObjectNode, FloatLeaf, BoolLeaf, StringLeaf, EnumLeaf, ListingNode>;

class Value {
 public:
  Value() : node_(std::make_shared<const Node>(ObjectNode{})) {}

  static Value object(std::string class_name, std::vector<std::pair<std::string, Value>> members) {
    return Value(ObjectNode{std::move(class_name), std::move(members)});
  }
  static Value floating(double v, std::optional<FloatBounds> bounds = std::nullopt) {
    return Value(FloatLeaf{v, bounds});
  }
  static Value boolean(bool v) { return Value(BoolLeaf{v}); }
  static Value string(std::string v) { return Value(StringLeaf{std::move(v)}); }
  static Value enumeration(std::string v, std::string alias) {
    return Value(EnumLeaf{std::move(v), std::move(alias)});
  }
  static Value listing(std::vector<Value> records) { return Value(ListingNode{std::move(records)}); }

  ValueKind kind() const { return static_cast<ValueKind>(node_->index()); }
  bool is_object() const { return kind() == ValueKind::Object; }
  bool is_listing() const { return kind() == ValueKind::Listing; }
  bool is_leaf() const { return !is_object() && !is_listing(); }

  const Node& node() const { return *node_; }
  const ObjectNode& as_object() const { return std::get<ObjectNode>(*node_); }
  const ListingNode& as_listing() const { return std::get<ListingNode>(*node_); }
  const FloatLeaf& as_float() const { return std::get<FloatLeaf>(*node_); }
  bool as_bool() const { return std::get<BoolLeaf>(*node_).value; }
  /// Text of a String or Enum leaf.
  const std::string& as_text() const {
    if (const auto* e = std::get_if<EnumLeaf>(node_.get())) return e->value;
    return std::get<StringLeaf>(*node_).value;
  }

  const Value* member(std::string_view name) const {
    if (!is_object()) return nullptr;
    for (const auto& [key, child] : as_object().members)
      if (key == name) return &child;
    return nullptr;
  }

  /// Resolves a dotted path ("a.b.c"); nullptr when any step is missing.
  const Value* at_path(std::string_view path) const {
    const Value* current = this;
    while (current && !path.empty()) {
      const auto dot = path.find('.');
      current = current->member(path.substr(0, dot));
      path = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
    }
    return current;
  }

  /// A copy of this object with member `name` replaced. Other members are
  /// shared, not copied.
  Value with_member(std::string_view name, Value replacement) const {
    ObjectNode copy = as_object();
    for (auto& [key, child] : copy.members)
      if (key == name) child = std::move(replacement);
    return Value(std::move(copy));
  }

  bool same_node(const Value& other) const { return node_ == other.node_; }

  friend bool operator==(const Value& a, const Value& b);

 private:
  explicit Value(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

  std::shared_ptr<const Node> node_;
};

using ValueTree = Value;

inline bool operator==(const FloatLeaf& a, const FloatLeaf& b) {
  return a.value == b.value && a.bounds == b.bounds;
}
inline bool operator==(const BoolLeaf& a, const BoolLeaf& b) { return a.value == b.value; }
inline bool operator==(const StringLeaf& a, const StringLeaf& b) { return a.value == b.value; }
inline bool operator==(const EnumLeaf& a, const EnumLeaf& b) {
  return a.value == b.value && a.alias == b.alias;
}
inline bool operator==(const ObjectNode& a, const ObjectNode& b) {
  return a.class_name == b.class_name && a.members == b.members;
}
inline bool operator==(const ListingNode& a, const ListingNode& b) { return a.records == b.records; }

inline bool operator==(const Value& a, const Value& b) {
  return a.node_ == b.node_ || *a.node_ == *b.node_;
}

/// Scalar as written in a scenario or a listing record.
using Scalar = std::variant<double, bool, std::string>;

/// Short human-readable rendering of a leaf (as it would appear in JSON).
inline std::string leaf_text(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Float: return format_float(v.as_float().value);
    case ValueKind::Bool: return v.as_bool() ? "true" : "false";
    case ValueKind::String:
    case ValueKind::Enum: return "\"" + v.as_text() + "\"";
    case ValueKind::Listing: return "[" + std::to_string(v.as_listing().records.size()) + " records]";
    case ValueKind::Object: return "{...}";
  }
  return {};
}

inline std::string scalar_text(const Scalar& s) {
  if (const auto* d = std::get_if<double>(&s)) return format_float(*d);
  if (const auto* b = std::get_if<bool>(&s)) return *b ? "true" : "false";
  return "\"" + std::get<std::string>(s) + "\"";
}

}  // namespace oddl
