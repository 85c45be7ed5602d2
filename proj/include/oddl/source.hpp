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

/// @file source.hpp
/// @brief Source locations and the exception hierarchy shared by every stage.

#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oddl {

/// A region of a source file. Lines and columns are 1-based; columns count
/// bytes. `offset` is the 0-based byte offset of the first character.
struct SourceSpan {
  std::string file_uri;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
  std::size_t offset = 0;

  bool operator==(const SourceSpan&) const = default;
};

inline std::string span_text(std::string_view source, const SourceSpan& span) {
  if (span.offset >= source.size()) return {};
  return std::string(source.substr(span.offset, span.length));
}

/// Returns the text of the 1-based line `line`, without its terminator.
inline std::string_view source_line(std::string_view source, std::size_t line) {
  std::size_t begin = 0;
  for (std::size_t current = 1; current < line; ++current) {
    const auto nl = source.find('\n', begin);
    if (nl == std::string_view::npos) return {};
    begin = nl + 1;
  }
  const auto end = source.find('\n', begin);
  return source.substr(begin, end == std::string_view::npos ? source.size() - begin
                                                            : end - begin);
}

inline std::string file_uri_for(const std::filesystem::path& path) {
  auto generic = std::filesystem::absolute(path).lexically_normal().generic_string();
  if (generic.empty() || generic.front() != '/') generic.insert(generic.begin(), '/');
  return "file://" + generic;
}

/// Inverse of file_uri_for; returns an empty path for non-file URIs.
inline std::filesystem::path path_from_uri(std::string_view uri) {
  constexpr std::string_view scheme = "file://";
  if (uri.substr(0, scheme.size()) != scheme) return {};
  return std::filesystem::path(std::string(uri.substr(scheme.size())));
}

/// Base of all errors that abort a stage (as opposed to collected violations).
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, SourceSpan span)
      : std::runtime_error(what), span_(std::move(span)) {}
  explicit Error(const std::string& what) : std::runtime_error(what) {}

  const SourceSpan& span() const noexcept { return span_; }

  /// "<uri>:<line>:<column>: <message>" when a location is known.
  std::string located() const {
    if (span_.file_uri.empty()) return what();
    return span_.file_uri + ":" + std::to_string(span_.line) + ":" +
           std::to_string(span_.column) + ": " + what();
  }

 private:
  SourceSpan span_;
};

class LexicalError : public Error {
  using Error::Error;
};

class SyntaxError : public Error {
  using Error::Error;
};

class ImportError : public Error {
  using Error::Error;
};

class SchemaError : public Error {
  using Error::Error;
};

class UnknownTemplateError : public Error {
  using Error::Error;
};

}  // namespace oddl
