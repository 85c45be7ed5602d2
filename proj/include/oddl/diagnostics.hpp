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

/// @file diagnostics.hpp
/// @brief Human-readable rendering of violations and errors.
///
/// A constraint violation renders as
///
///     Type constraint 'isBetween(0, speed_limit_global)' violated.
///     Value: 31.0
///
///     139 | speed_limit : Float(isBetween(0, speed_limit_global))
///                               ^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^
///     at ODD.scen_template#Drivable_area_lane_specification.speed_limit (bundled:///scen_template.odd, line 139)

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddl/imports.hpp"
#include "oddl/violation.hpp"

namespace oddl {

/// Returns the text of the module at a URI, if known.
using SourceLookup = std::function<std::optional<std::string_view>(std::string_view uri)>;

inline SourceLookup lookup_in(const ModuleGraph& graph) {
  return [&graph](std::string_view uri) { return graph.source_for(uri); };
}

/// `<N> | <line>` followed by a caret line under `span`.
inline std::string source_excerpt(std::string_view source, const SourceSpan& span) {
  const std::string gutter = std::to_string(span.line) + " | ";
  const std::string_view line = source_line(source, span.line);
  std::string out = gutter + std::string(line) + "\n";
  const std::size_t start = span.column > 0 ? span.column - 1 : 0;
  std::size_t width = span.length == 0 ? 1 : span.length;
  if (start < line.size()) width = std::min(width, line.size() - start);
  out += std::string(gutter.size() + start, ' ') + std::string(width, '^') + "\n";
  return out;
}

inline std::string location_line(std::string_view owner, const SourceSpan& site) {
  std::string out = "at ";
  if (!owner.empty()) out += std::string(owner) + " ";
  out += "(" + site.file_uri + ", line " + std::to_string(site.line) + ")";
  return out;
}

/// Multi-line report for one violation, ending in a newline.
inline std::string format_violation(const Violation& v, const SourceLookup& lookup = {}) {
  std::string out;
  if (v.kind == ViolationKind::ConstraintViolated) {
    out += "Type constraint '" + v.constraint_text + "' violated.\n";
  } else {
    out += std::string(to_string(v.kind)) + ": " + v.message + "\n";
  }
  if (!v.offending_value.empty()) out += "Value: " + v.offending_value + "\n";
  if (v.kind != ViolationKind::ConstraintViolated && !v.property_path.empty())
    out += "Path: " + v.property_path + "\n";

  const SourceSpan& shown = v.highlight ? *v.highlight : v.use_site ? *v.use_site : v.decl_site;
  std::optional<std::string_view> source;
  if (lookup && !shown.file_uri.empty()) source = lookup(shown.file_uri);
  if (source) out += "\n" + source_excerpt(*source, shown);
  else out += "\n";

  if (!v.decl_site.file_uri.empty()) out += location_line(v.owner, v.decl_site) + "\n";
  else if (!v.owner.empty()) out += "at " + v.owner + "\n";
  if (v.use_site && v.use_site->file_uri != v.decl_site.file_uri && !v.decl_site.file_uri.empty())
    out += "amended " + location_line("", *v.use_site) + "\n";
  return out;
}

/// All violations separated by blank lines.
inline std::string format_violations(const std::vector<Violation>& violations,
                                     const SourceLookup& lookup = {}) {
  std::string out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out += "\n";
    out += format_violation(violations[i], lookup);
  }
  return out;
}

/// `<uri>:<line>:<col>: <kind>: <message>` plus an excerpt when the source is known.
inline std::string format_error(const Error& error, std::string_view kind,
                                const SourceLookup& lookup = {}) {
  std::string out = error.span().file_uri.empty() ? "" : error.span().file_uri + ":" +
                                                              std::to_string(error.span().line) + ":" +
                                                              std::to_string(error.span().column) + ": ";
  out += std::string(kind) + ": " + error.what() + "\n";
  if (lookup && !error.span().file_uri.empty())
    if (auto source = lookup(error.span().file_uri)) out += source_excerpt(*source, error.span());
  return out;
}

}  // namespace oddl
