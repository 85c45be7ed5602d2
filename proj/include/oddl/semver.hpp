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

/// @file semver.hpp
/// @brief Semantic version parsing and precedence (SemVer 2.0.0).

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oddl {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct SemVer {
  std::uint64_t major = 0;
  std::uint64_t minor = 0;
  std::uint64_t patch = 0;
  std::vector<std::string> prerelease;  ///< Dot-separated identifiers after '-'.

  /// Precedence per SemVer: build metadata is ignored, a prerelease sorts
  /// before the release, numeric identifiers sort numerically and below
  /// alphanumeric ones.
  std::strong_ordering operator<=>(const SemVer& other) const {
    if (auto c = major <=> other.major; c != 0) return c;
    if (auto c = minor <=> other.minor; c != 0) return c;
    if (auto c = patch <=> other.patch; c != 0) return c;
    if (prerelease.empty() || other.prerelease.empty())
      return other.prerelease.size() == prerelease.size()  ? std::strong_ordering::equal
             : prerelease.empty()                          ? std::strong_ordering::greater
                                                           : std::strong_ordering::less;
    for (std::size_t i = 0; i < prerelease.size() && i < other.prerelease.size(); ++i) {
      const auto& a = prerelease[i];
      const auto& b = other.prerelease[i];
      const bool an = is_numeric(a);
      const bool bn = is_numeric(b);
      if (an && bn) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        if (auto c = a <=> b; c != 0) return c;
      } else if (an != bn) {
        return an ? std::strong_ordering::less : std::strong_ordering::greater;
      } else if (auto c = a <=> b; c != 0) {
        return c;
      }
    }
    return prerelease.size() <=> other.prerelease.size();
  }
  bool operator==(const SemVer& other) const { return (*this <=> other) == 0; }

  static bool is_numeric(std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  }
};

namespace detail {

inline std::optional<std::uint64_t> parse_version_number(std::string_view s) {
  if (!SemVer::is_numeric(s) || (s.size() > 1 && s.front() == '0')) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Parses "MAJOR.MINOR.PATCH[-pre][+build]"; nullopt when malformed.
inline std::optional<SemVer> parse_semver(std::string_view text) {
  if (auto plus = text.find('+'); plus != std::string_view::npos) {
    if (plus + 1 == text.size()) return std::nullopt;
    text = text.substr(0, plus);
  }
  SemVer v;
  if (auto dash = text.find('-'); dash != std::string_view::npos) {
    std::string_view pre = text.substr(dash + 1);
    text = text.substr(0, dash);
    if (pre.empty()) return std::nullopt;
    std::size_t start = 0;
    for (;;) {
      auto dot = pre.find('.', start);
      std::string_view id = pre.substr(start, dot == std::string_view::npos ? pre.npos : dot - start);
      if (id.empty() ||
          id.find_first_not_of("0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz-") !=
              std::string_view::npos ||
          (SemVer::is_numeric(id) && id.size() > 1 && id.front() == '0'))
        return std::nullopt;
      v.prerelease.emplace_back(id);
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  }
  std::uint64_t* parts[] = {&v.major, &v.minor, &v.patch};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    auto dot = text.find('.', start);
    if ((i < 2) == (dot == std::string_view::npos)) return std::nullopt;
    auto n = detail::parse_version_number(
        text.substr(start, dot == std::string_view::npos ? text.npos : dot - start));
    if (!n) return std::nullopt;
    *parts[i] = *n;
    start = dot + 1;
  }
  return v;
}

}  // namespace oddl
