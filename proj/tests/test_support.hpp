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

// Shared fixtures: an in-memory file system and the odd1 instance.

#pragma once

#include <map>
#include <string>

#include "oddl/oddl.hpp"

namespace oddl::testing {

inline constexpr const char* kMemRoot = "/mem";

/// Files under /mem, served to the import resolver.
class MemFs {
 public:
  MemFs& add(const std::string& name, std::string text) {
    files_[std::string(kMemRoot) + "/" + name] = std::move(text);
    return *this;
  }

  FileReader reader() const {
    return [this](const std::filesystem::path& p) -> std::optional<std::string> {
      auto it = files_.find(p.lexically_normal().generic_string());
      if (it == files_.end()) return std::nullopt;
      return it->second;
    };
  }

  ImportPolicy policy() const { return ImportPolicy{{kMemRoot}, true}; }

  ModuleGraph load(const std::string& name) const {
    return load_module_graph(std::string(kMemRoot) + "/" + name, reader(), policy());
  }

 private:
  std::map<std::string, std::string> files_;
};

/// An instance file importing the bundled template; `lane_spec` is the body
/// of the drivable_area_lane_specification block.
inline std::string odd1_source(const std::string& lane_spec, const std::string& name = "odd1") {
  return "import \"ODD_template.odd\"\n"
         "\n" +
         name +
         " : ODD_template.odd = new {\n"
         "  scenery {\n"
         "    zone {\n"
         "      region_or_state = \"Sweden\"\n"
         "    }\n"
         "    drivable_area {\n"
         "      drivable_area_lane_specification {\n" +
         lane_spec +
         "      }\n"
         "    }\n"
         "  }\n"
         "}\n";
}

inline const std::string kOdd1LaneSpec =
    "        lane_dimensions {\n"
    "          lane_dimension = 2.8\n"
    "        }\n"
    "        direction_of_travel = \"right_hand_travel\"\n"
    "        speed_limit = 15.0\n"
    "        lane_usage = true\n";

inline std::string odd1_with_speed(const std::string& speed) {
  return odd1_source("        direction_of_travel = \"right_hand_travel\"\n"
                     "        speed_limit = " +
                     speed + "\n");
}

inline EvalResult evaluate_text(const std::string& text, const std::string& instance = "odd1") {
  MemFs fs;
  fs.add("test.odd", text);
  return evaluate(fs.load("test.odd"), instance);
}

/// Evaluates and requires success.
inline Value eval_ok(const std::string& text, const std::string& instance = "odd1") {
  EvalResult r = evaluate_text(text, instance);
  if (!r) throw std::runtime_error("evaluation failed:\n" + format_violations(r.violations()));
  return r.value();
}

inline const std::string kLaneSpecPath = "scenery.drivable_area.drivable_area_lane_specification";

inline std::string lane(const std::string& leaf) { return kLaneSpecPath + "." + leaf; }

/// The evaluator over the bundled template graph (no instance file).
inline const Evaluator& template_evaluator() {
  static const Evaluator evaluator(load_standard_graph("odd_template"));
  return evaluator;
}

inline const ResolvedClass& odd_class() {
  return *template_evaluator().schema().find_class("ODD.ODD_template#odd");
}

}  // namespace oddl::testing
