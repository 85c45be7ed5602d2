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

/// @file imports.hpp
/// @brief Import resolution into an acyclic ModuleGraph.
///
/// Imports are paths relative to the importing file. A `.pkl` extension is
/// mapped to `.odd`. Local files are read only when they fall under one of
/// the policy's allowed roots; a bare file name that is not found locally
/// falls back to the bundled templates when the policy allows it. Modules
/// loaded from the bundle may only import other bundled modules.

#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oddl/bundled.hpp"
#include "oddl/parser.hpp"

namespace oddl {

struct ImportPolicy {
  std::vector<std::filesystem::path> allowed_roots;
  bool allow_bundled = true;

  bool permits(const std::filesystem::path& file) const {
    const auto target = std::filesystem::weakly_canonical(file);
    for (const auto& root : allowed_roots) {
      const auto rel = target.lexically_relative(std::filesystem::weakly_canonical(root));
      if (!rel.empty() && *rel.begin() != "..") return true;
    }
    return false;
  }
};

/// Returns the file contents, or nullopt when the file does not exist.
using FileReader = std::function<std::optional<std::string>(const std::filesystem::path&)>;

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ParsedModule {
  ModuleAst ast;
  std::string source;
};

struct LoadedModule {
  ModuleAst ast;
  std::string source;
  bool bundled = false;
  /// Import qualifier (file stem of the import path) -> module name.
  std::map<std::string, std::string, std::less<>> import_aliases;
};

/// Immutable set of modules reachable from an entry module. Iteration order
/// puts every module after the modules it imports; the entry comes last.
class ModuleGraph {
 public:
  ModuleGraph() = default;

  const LoadedModule& entry() const { return *modules_.back(); }
  std::size_t size() const { return modules_.size(); }
  auto begin() const { return modules_.begin(); }
  auto end() const { return modules_.end(); }

  const LoadedModule* find(std::string_view module_name) const {
    for (const auto& m : modules_)
      if (m->ast.module_name == module_name) return m.get();
    return nullptr;
  }

  /// Source text for a file URI, for diagnostics.
  std::optional<std::string_view> source_for(std::string_view uri) const {
    for (const auto& m : modules_)
      if (m->ast.source_uri == uri) return std::string_view(m->source);
    return std::nullopt;
  }

 private:
  friend class ImportResolver;
  std::vector<std::shared_ptr<const LoadedModule>> modules_;
};

namespace detail {

inline std::string map_import_extension(std::string path) {
  constexpr std::string_view pkl = ".pkl";
  if (path.size() >= pkl.size() && path.compare(path.size() - pkl.size(), pkl.size(), pkl) == 0)
    path.replace(path.size() - pkl.size(), pkl.size(), ".odd");
  return path;
}

}  // namespace detail

class ImportResolver {
 public:
  ImportResolver(const FileReader& reader, const ImportPolicy& policy)
      : reader_(reader), policy_(policy) {}

  ModuleGraph run(ParsedModule entry, bool entry_bundled) {
    auto loaded = std::make_shared<LoadedModule>();
    loaded->ast = std::move(entry.ast);
    loaded->source = std::move(entry.source);
    loaded->bundled = entry_bundled;
    visit(std::move(loaded));
    return std::move(graph_);
  }

 private:
  struct Location {
    std::string key;  ///< Canonical file path or bundled URI.
    std::string uri;
    std::filesystem::path path;
    const BundledAsset* asset = nullptr;
  };

  static std::string location_key(const LoadedModule& m) { return m.ast.source_uri; }

  Location locate(const LoadedModule& importer, const ImportDecl& imp) const {
    const std::string mapped = detail::map_import_extension(imp.path);
    const bool bare = std::filesystem::path(mapped).filename().string() == mapped;
    auto bundled = [&]() -> std::optional<Location> {
      if (!bare || !policy_.allow_bundled) return std::nullopt;
      const BundledAsset* asset = find_bundled_by_file(mapped);
      if (!asset) return std::nullopt;
      return Location{bundled_uri(asset->file_name), bundled_uri(asset->file_name), {}, asset};
    };

    if (importer.bundled) {
      if (bare)
        if (const BundledAsset* asset = find_bundled_by_file(mapped))
          return Location{bundled_uri(asset->file_name), bundled_uri(asset->file_name), {}, asset};
      throw ImportError("bundled module cannot import '" + imp.path + "'", imp.span);
    }

    const auto base = path_from_uri(importer.ast.source_uri).parent_path();
    const auto candidate = (base / mapped).lexically_normal();
    if (policy_.permits(candidate)) {
      if (cache_or_read(candidate))
        return Location{file_uri_for(candidate), file_uri_for(candidate), candidate, nullptr};
      if (auto b = bundled()) return *b;
      throw ImportError("file not found: " + candidate.generic_string(), imp.span);
    }
    if (auto b = bundled()) return *b;
    throw ImportError("import of '" + candidate.generic_string() + "' violates the import policy",
                      imp.span);
  }

  const std::string* cache_or_read(const std::filesystem::path& path) const {
    const auto key = path.generic_string();
    if (auto it = read_cache_.find(key); it != read_cache_.end()) return &it->second;
    auto text = reader_(path);
    if (!text) return nullptr;
    return &read_cache_.emplace(key, std::move(*text)).first->second;
  }

  void visit(std::shared_ptr<LoadedModule> module) {
    const std::string key = location_key(*module);
    stack_.push_back({key, module->ast.module_name});

    for (const auto& imp : module->ast.imports) {
      const Location loc = locate(*module, imp);
      for (std::size_t i = 0; i < stack_.size(); ++i) {
        if (stack_[i].first != loc.key) continue;
        std::string cycle;
        for (std::size_t j = i; j < stack_.size(); ++j) cycle += stack_[j].second + " -> ";
        cycle += stack_[i].second;
        throw ImportError("import cycle: " + cycle, imp.span);
      }

      const std::string alias =
          std::filesystem::path(detail::map_import_extension(imp.path)).stem().string();
      if (module->import_aliases.count(alias))
        throw ImportError("duplicate import qualifier '" + alias + "'", imp.span);

      if (auto done = done_.find(loc.key); done != done_.end()) {
        module->import_aliases.emplace(alias, done->second);
        continue;
      }

      auto child = std::make_shared<LoadedModule>();
      if (loc.asset) {
        child->source = std::string(loc.asset->source);
        child->bundled = true;
      } else {
        child->source = *cache_or_read(loc.path);
      }
      child->ast = parse_source(child->source, loc.uri);
      module->import_aliases.emplace(alias, child->ast.module_name);
      visit(std::move(child));
    }

    stack_.pop_back();
    for (const auto& m : graph_.modules_)
      if (m->ast.module_name == module->ast.module_name)
        throw ImportError("module name '" + module->ast.module_name +
                              "' is declared by both " + m->ast.source_uri + " and " +
                              module->ast.source_uri,
                          module->ast.module_span);
    done_.emplace(key, module->ast.module_name);
    graph_.modules_.push_back(std::move(module));
  }

  const FileReader& reader_;
  const ImportPolicy& policy_;
  ModuleGraph graph_;
  std::vector<std::pair<std::string, std::string>> stack_;  // (key, module name)
  std::map<std::string, std::string> done_;                 // key -> module name
  mutable std::map<std::string, std::string> read_cache_;
};

/// Loads every module transitively imported by `entry`. Each module appears
/// once; cycles, policy violations and missing files raise ImportError.
inline ModuleGraph resolve_imports(ParsedModule entry, const FileReader& reader,
                                   const ImportPolicy& policy) {
  const bool bundled = entry.ast.source_uri.rfind(kBundledScheme, 0) == 0;
  return ImportResolver(reader, policy).run(std::move(entry), bundled);
}

/// Reads, parses and import-resolves the file at `path`.
inline ModuleGraph load_module_graph(const std::filesystem::path& path, const FileReader& reader,
                                     const ImportPolicy& policy) {
  auto text = reader(path);
  if (!text) throw ImportError("file not found: " + path.generic_string());
  ParsedModule entry{parse_source(*text, file_uri_for(path)), std::move(*text)};
  return resolve_imports(std::move(entry), reader, policy);
}

}  // namespace oddl
