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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "oddl/source.hpp"
#include "oddl/value.hpp"

namespace oddl {

enum class ViolationKind : std::uint8_t {
  ConstraintViolated,
  UnknownProperty,
  TypeMismatch,
  MissingRequired,
  VersionGate,
  EnumOutOfRange,
  ProbabilityRange,
};

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ConstraintViolated: return "CONSTRAINT_VIOLATED";
    case ViolationKind::UnknownProperty: return "UNKNOWN_PROPERTY";
    case ViolationKind::TypeMismatch: return "TYPE_MISMATCH";
    case ViolationKind::MissingRequired: return "MISSING_REQUIRED";
    case ViolationKind::VersionGate: return "VERSION_GATE";
    case ViolationKind::EnumOutOfRange: return "ENUM_OUT_OF_RANGE";
    case ViolationKind::ProbabilityRange: return "PROBABILITY_RANGE";
  }
  return "?";
}

/// A defect found while evaluating an instance.
struct Violation {
  ViolationKind kind = ViolationKind::TypeMismatch;
  std::string message;
  std::string constraint_text;  ///< Set for CONSTRAINT_VIOLATED.
  std::string offending_value;  ///< Rendered literal, e.g. "31.0".
  std::string property_path;    ///< Dotted path from the instance root.
  std::string owner;            ///< "<module>#<Class>.<property>" when known.
  SourceSpan decl_site;
  std::optional<SourceSpan> use_site;
  std::optional<SourceSpan> highlight;  ///< Region to underline (the constraint).
};

/// Either a fully evaluated tree or at least one violation, never both.
class EvalResult {
 public:
  EvalResult(Value value) : data_(std::move(value)) {}
  EvalResult(std::vector<Violation> violations) : data_(std::move(violations)) {
    if (std::get<1>(data_).empty())
      throw std::invalid_argument("a failed EvalResult needs at least one violation");
  }

  bool ok() const { return data_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const Value& value() const {
    if (!ok()) throw std::logic_error("EvalResult holds violations, not a value");
    return std::get<0>(data_);
  }
  const std::vector<Violation>& violations() const {
    static const std::vector<Violation> none;
    return ok() ? none : std::get<1>(data_);
  }

  bool has(ViolationKind kind) const {
    for (const auto& v : violations())
      if (v.kind == kind) return true;
    return false;
  }

 private:
  std::variant<Value, std::vector<Violation>> data_;
};

}  // namespace oddl
