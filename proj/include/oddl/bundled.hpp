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

// Raw table of the templates embedded at build time.

#pragma once

#include <string>
#include <string_view>

namespace oddl {

struct BundledAsset {
  std::string_view name;       ///< e.g. "scen_template"
  std::string_view file_name;  ///< e.g. "scen_template.odd"
  std::string_view source;
  std::string_view sha256;  ///< Hex digest recorded when the asset was embedded.
};

#include "oddl/bundled_assets.inc"

inline constexpr std::string_view kBundledScheme = "bundled:///";

inline std::string bundled_uri(std::string_view file_name) {
  return std::string(kBundledScheme) + std::string(file_name);
}

inline const BundledAsset* find_bundled_by_file(std::string_view file_name) {
  for (const auto& asset : kBundledAssets)
    if (asset.file_name == file_name) return &asset;
  return nullptr;
}

inline const BundledAsset* find_bundled_by_name(std::string_view name) {
  for (const auto& asset : kBundledAssets)
    if (asset.name == name) return &asset;
  return nullptr;
}

}  // namespace oddl
