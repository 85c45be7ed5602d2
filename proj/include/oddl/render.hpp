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

/// @file render.hpp
/// @brief JSON, YAML and PlantUML output for evaluated trees.
///
/// Keys appear in declaration order. Floats always carry a fractional part
/// ("30.0"). None of the renderers emit a trailing newline.

#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oddl/format.hpp"
#include "oddl/value.hpp"

namespace oddl {

enum class RenderFormat : std::uint8_t { Json, Yaml, PlantUml };

struct RenderOptions {
  RenderFormat format = RenderFormat::Json;
  int indent_width = 2;

  void validate() const {
    if (indent_width < 1 || indent_width > 8)
      throw std::invalid_argument("indent width must be between 1 and 8, got " +
                                  std::to_string(indent_width));
  }
};

inline std::optional<RenderFormat> parse_render_format(std::string_view name) {
  if (name == "json") return RenderFormat::Json;
  if (name == "yaml") return RenderFormat::Yaml;
  if (name == "plantuml") return RenderFormat::PlantUml;
  return std::nullopt;
}

/// JSON string literal, escaping quotes, backslashes and control characters.
inline std::string json_quote(std::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          static constexpr char kHex[] = "0123456789abcdef";
          out += "\\u00";
          out += kHex[(c >> 4) & 0xf];
          out += kHex[c & 0xf];
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

namespace detail {

inline std::string scalar_json(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Float: return format_float(v.as_float().value);
    case ValueKind::Bool: return v.as_bool() ? "true" : "false";
    default: return json_quote(v.as_text());
  }
}

inline void write_json(const Value& v, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  if (v.is_object()) {
    const auto& members = v.as_object().members;
    if (members.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    for (std::size_t i = 0; i < members.size(); ++i) {
      out += pad + json_quote(members[i].first) + ": ";
      write_json(members[i].second, indent, depth + 1, out);
      out += i + 1 < members.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (v.is_listing()) {
    const auto& records = v.as_listing().records;
    if (records.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      out += pad;
      write_json(records[i], indent, depth + 1, out);
      out += i + 1 < records.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else {
    out += scalar_json(v);
  }
}

/// Plain YAML keys are kept bare only when they cannot be read as anything
/// but a string.
inline std::string yaml_key(std::string_view key) {
  static constexpr std::string_view kReserved[] = {"true",  "false", "null", "yes", "no",
                                                   "on",    "off",   "y",    "n",   "~",
                                                   "True",  "False", "Null", "NULL", "TRUE",
                                                   "FALSE", "Yes",   "No",   "On",  "Off"};
  bool plain = !key.empty();
  for (const char c : key)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'))
      plain = false;
  if (plain && (std::isdigit(static_cast<unsigned char>(key.front())) || key.front() == '-' ||
                key.front() == '.'))
    plain = false;
  for (const auto r : kReserved)
    if (key == r) plain = false;
  return plain ? std::string(key) : json_quote(key);
}

inline bool is_empty_container(const Value& v) {
  return (v.is_object() && v.as_object().members.empty()) ||
         (v.is_listing() && v.as_listing().records.empty());
}

inline void write_yaml_members(const ObjectNode& obj, int indent, const std::string& pad,
                               bool first_inline, std::string& out);

/// Writes `v` after its key; `pad` is the indentation of that key.
inline void write_yaml_value(const Value& v, int indent, const std::string& pad, std::string& out) {
  const std::string nested = pad + std::string(static_cast<std::size_t>(indent), ' ');
  if (v.is_leaf()) {
    out += " " + scalar_json(v);
  } else if (is_empty_container(v)) {
    out += v.is_object() ? " {}" : " []";
  } else if (v.is_object()) {
    out += "\n";
    write_yaml_members(v.as_object(), indent, nested, false, out);
  } else {
    for (const auto& record : v.as_listing().records) {
      out += "\n" + nested + "-";
      if (is_empty_container(record)) {
        out += " {}";
        continue;
      }
      out += " ";
      write_yaml_members(record.as_object(), indent, nested + "  ", true, out);
    }
  }
}

inline void write_yaml_members(const ObjectNode& obj, int indent, const std::string& pad,
                               bool first_inline, std::string& out) {
  for (std::size_t i = 0; i < obj.members.size(); ++i) {
    if (i > 0) out += "\n";
    if (i > 0 || !first_inline) out += pad;
    out += yaml_key(obj.members[i].first) + ":";
    write_yaml_value(obj.members[i].second, indent, pad, out);
  }
}

}  // namespace detail

inline std::string render_json(const Value& tree, const RenderOptions& opts = {}) {
  opts.validate();
  std::string out;
  detail::write_json(tree, opts.indent_width, 0, out);
  return out;
}

/// Block-style YAML. Strings are always double-quoted.
inline std::string render_yaml(const Value& tree, const RenderOptions& opts = {}) {
  opts.validate();
  std::string out;
  if (tree.is_leaf() || detail::is_empty_container(tree)) {
    detail::write_yaml_value(tree, opts.indent_width, "", out);
    return out.substr(1);
  }
  if (tree.is_listing()) {
    detail::write_yaml_value(tree, 0, "", out);
    return out.substr(1);
  }
  detail::write_yaml_members(tree.as_object(), opts.indent_width, "", false, out);
  return out;
}

/// The JSON rendering framed for PlantUML's JSON tree view.
inline std::string render_plantuml(const Value& tree, const RenderOptions& opts = {}) {
  return "@startjson\n" + render_json(tree, opts) + "\n@endjson";
}

inline std::string render(const Value& tree, const RenderOptions& opts) {
  switch (opts.format) {
    case RenderFormat::Json: return render_json(tree, opts);
    case RenderFormat::Yaml: return render_yaml(tree, opts);
    case RenderFormat::PlantUml: return render_plantuml(tree, opts);
  }
  return {};
}

}  // namespace oddl
