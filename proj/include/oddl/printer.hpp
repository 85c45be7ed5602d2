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

// Debug printer: renders a ModuleAst back to ODDL source text.

#pragma once

#include <sstream>
#include <string>

#include "oddl/parser.hpp"

namespace oddl {

namespace detail {

inline void print_block(std::ostringstream& out, const AmendmentBlock& block, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out << "{\n";
  for (const auto& entry : block.entries) {
    out << pad << "  " << entry.name;
    if (entry.is_block()) {
      out << ' ';
      print_block(out, std::get<AmendmentBlock>(entry.value), depth + 1);
    } else {
      out << " = " << literal_text(std::get<Literal>(entry.value)) << '\n';
    }
  }
  for (const auto& element : block.elements) {
    out << pad << "  new {";
    for (const auto& field : element.fields)
      out << ' ' << field.name << " = " << literal_text(field.value) << ';';
    out << " }\n";
  }
  out << pad << "}\n";
}

}  // namespace detail

inline std::string render_source(const ModuleAst& ast) {
  std::ostringstream out;
  if (ast.min_tool_version)
    out << "@ModuleInfo { minToolVersion = " << quote_string(*ast.min_tool_version) << " }\n";
  out << "module " << ast.module_name << "\n\n";
  for (const auto& imp : ast.imports) out << "import " << quote_string(imp.path) << '\n';
  if (!ast.imports.empty()) out << '\n';
  for (const auto& c : ast.consts) out << "const " << c.name << " = " << literal_text(c.value) << '\n';
  for (const auto& a : ast.type_aliases) {
    out << "typealias " << a.name << " =";
    for (std::size_t i = 0; i < a.alternatives.size(); ++i)
      out << (i ? " | " : " ") << quote_string(a.alternatives[i]);
    out << '\n';
  }
  for (const auto& cls : ast.classes) {
    out << "\nclass " << cls.name << " {\n";
    for (const auto& p : cls.properties) {
      out << "  " << p.name << " : " << p.declared_type.name;
      if (p.constraint) out << " (" << p.constraint->source_text << ')';
      if (p.default_value) out << " = " << value_ref_text(*p.default_value);
      out << '\n';
    }
    out << "}\n";
  }
  for (const auto& inst : ast.instances) {
    out << '\n' << inst.name << " : " << inst.target_type << " = new ";
    detail::print_block(out, inst.amendment, 0);
  }
  return out.str();
}

}  // namespace oddl
