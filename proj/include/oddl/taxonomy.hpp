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

/// @file taxonomy.hpp
/// @brief Access to the bundled ISO 34503 taxonomy templates.

#pragma once

#include <string>
#include <vector>

#include "oddl/bundled.hpp"
#include "oddl/imports.hpp"

namespace oddl {

struct TemplateAsset {
  std::string name;
  std::string source_text;
  std::string declared_min_tool_version;
};

/// Names of the bundled templates, in a fixed order.
inline std::vector<std::string> list_standard_templates() {
  std::vector<std::string> names;
  for (const auto& asset : kBundledAssets) names.emplace_back(asset.name);
  return names;
}

inline const BundledAsset& standard_asset(std::string_view name) {
  const BundledAsset* asset = find_bundled_by_name(name);
  if (!asset) throw UnknownTemplateError("unknown template '" + std::string(name) + "'");
  return *asset;
}

inline TemplateAsset template_asset(std::string_view name) {
  const BundledAsset& asset = standard_asset(name);
  ModuleAst ast = parse_source(asset.source, bundled_uri(asset.file_name));
  return TemplateAsset{std::string(asset.name), std::string(asset.source),
                       ast.min_tool_version.value_or("")};
}

/// Parses the named template and resolves its imports against the bundle.
inline ModuleGraph load_standard_graph(std::string_view name) {
  const BundledAsset& asset = standard_asset(name);
  std::string source(asset.source);
  ParsedModule entry{parse_source(source, bundled_uri(asset.file_name)), source};
  const FileReader no_files = [](const std::filesystem::path&) -> std::optional<std::string> {
    return std::nullopt;
  };
  return resolve_imports(std::move(entry), no_files, ImportPolicy{{}, true});
}

/// The parsed, import-resolved AST of a bundled template.
inline ModuleAst load_standard_template(std::string_view name) {
  return load_standard_graph(name).entry().ast;
}

}  // namespace oddl
