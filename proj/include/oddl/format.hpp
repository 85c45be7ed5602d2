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

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace oddl {

/// Shortest round-trip decimal form of `value` with at least one fractional
/// digit: 15 -> "15.0", 2.8 -> "2.8", 1e-09 -> "1.0e-09".
inline std::string format_float(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite Float cannot be rendered");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
  std::string text(buf, end);
  const auto exp = text.find('e');
  const auto mantissa_end = exp == std::string::npos ? text.size() : exp;
  if (text.find('.') == std::string::npos) text.insert(mantissa_end, ".0");
  return text;
}

}  // namespace oddl
