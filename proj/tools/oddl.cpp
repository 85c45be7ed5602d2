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

// oddl: evaluate, render and compare ODD descriptions.
//
//   oddl eval [-f json|yaml|plantuml] [-i NAME] [--indent N] FILE
//   oddl within [-p PROFILE] [-i NAME] ODD_FILE SCENARIO_FILE
//   oddl contains [-p PROFILE] [-i NAME] OUTER_FILE INNER_FILE
//   oddl diff [-i NAME] A_FILE B_FILE
//   oddl templates [NAME]
//
// Exit status: 0 success, 1 evaluation failure or negative analysis result,
// 2 parse, import, usage or configuration error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oddl/oddl.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

/// Raised for errors already reported on stderr.
struct Reported {
  int code;
};

class Sources {
 public:
  std::optional<std::string_view> operator()(std::string_view uri) {
    auto it = cache_.find(std::string(uri));
    if (it == cache_.end()) {
      std::optional<std::string> text;
      if (uri.rfind(oddl::kBundledScheme, 0) == 0) {
        if (const auto* asset = oddl::find_bundled_by_file(uri.substr(oddl::kBundledScheme.size())))
          text = std::string(asset->source);
      } else if (auto path = oddl::path_from_uri(uri); !path.empty()) {
        text = oddl::read_file(path);
      }
      it = cache_.emplace(std::string(uri), std::move(text)).first;
    }
    if (!it->second) return std::nullopt;
    return std::string_view(*it->second);
  }

 private:
  std::map<std::string, std::optional<std::string>> cache_;
};

oddl::ImportPolicy policy_for(const std::filesystem::path& file) {
  oddl::ImportPolicy policy;
  policy.allowed_roots.push_back(std::filesystem::absolute(file).parent_path());
  if (const char* extra = std::getenv("ODDL_IMPORT_ROOTS")) {
    std::string_view list(extra);
    while (!list.empty()) {
      const auto sep = list.find(':');
      const auto entry = list.substr(0, sep);
      if (!entry.empty()) policy.allowed_roots.emplace_back(std::string(entry));
      list = sep == std::string_view::npos ? std::string_view{} : list.substr(sep + 1);
    }
  }
  return policy;
}

[[noreturn]] void fail(int code, const std::string& message) {
  std::cerr << "oddl: " << message << "\n";
  throw Reported{code};
}

std::string read_or_fail(const std::string& path) {
  auto text = oddl::read_file(path);
  if (!text || std::filesystem::is_directory(path)) fail(kExitError, "file not found: " + path);
  return *text;
}

/// Loads and evaluates one instance. Violations are printed and turn into
/// `violation_code`; structural errors always exit 2.
oddl::Value evaluate_file(const std::string& file, const std::string& instance,
                          const std::string& tool_version, int violation_code) {
  Sources sources;
  try {
    if (!std::filesystem::is_regular_file(file)) fail(kExitError, "file not found: " + file);
    oddl::ModuleGraph graph = oddl::load_module_graph(file, oddl::read_file, policy_for(file));
    oddl::Evaluator evaluator(graph);
    std::string name = instance;
    if (name.empty()) {
      const auto names = evaluator.instance_names();
      if (names.size() != 1)
        fail(kExitError, file + " declares " + std::to_string(names.size()) +
                             " instances; choose one with -i");
      name = names.front();
    }
    oddl::EvalResult result = evaluator.evaluate(name, tool_version);
    if (!result) {
      std::cerr << oddl::format_violations(result.violations(), oddl::lookup_in(evaluator.schema().graph()));
      throw Reported{violation_code};
    }
    return result.value();
  } catch (const oddl::LexicalError& e) {
    std::cerr << oddl::format_error(e, "lexical error", std::ref(sources));
  } catch (const oddl::SyntaxError& e) {
    std::cerr << oddl::format_error(e, "syntax error", std::ref(sources));
  } catch (const oddl::ImportError& e) {
    std::cerr << oddl::format_error(e, "import error", std::ref(sources));
  } catch (const oddl::SchemaError& e) {
    std::cerr << oddl::format_error(e, "schema error", std::ref(sources));
  }
  throw Reported{kExitError};
}

oddl::AnalysisProfile profile_from(const std::string& path) {
  if (path.empty()) return oddl::standard_profile();
  return oddl::parse_profile(read_or_fail(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate, render and compare operational design domain descriptions.", "oddl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(oddl::kToolVersion));

  std::string instance;
  std::string tool_version(oddl::kToolVersion);
  std::string profile_path;

  auto* eval = app.add_subcommand("eval", "Evaluate an instance and render it");
  std::string format = "json";
  int indent = 2;
  std::string eval_file;
  eval->add_option("-f,--format", format, "Output format")
      ->check(CLI::IsMember({"json", "yaml", "plantuml"}));
  eval->add_option("-i,--instance", instance, "Instance to evaluate");
  eval->add_option("--tool-version", tool_version, "Tool version used for version gates");
  eval->add_option("--indent", indent, "Indent width (1-8)")->check(CLI::Range(1, 8));
  eval->add_option("file", eval_file, "ODD file")->required();

  auto* within = app.add_subcommand("within", "Check a scenario against an ODD");
  std::string odd_file, scenario_file;
  within->add_option("-p,--profile", profile_path, "Analysis profile (JSON)");
  within->add_option("-i,--instance", instance, "Instance to evaluate");
  within->add_option("--tool-version", tool_version, "Tool version used for version gates");
  within->add_option("odd_file", odd_file, "ODD file")->required();
  within->add_option("scenario_file", scenario_file, "Scenario (JSON)")->required();

  auto* contains = app.add_subcommand("contains", "Check whether one ODD covers another");
  std::string outer_file, inner_file;
  contains->add_option("-p,--profile", profile_path, "Analysis profile (JSON)");
  contains->add_option("-i,--instance", instance, "Instance to evaluate in both files");
  contains->add_option("--tool-version", tool_version, "Tool version used for version gates");
  contains->add_option("outer_file", outer_file, "Covering ODD file")->required();
  contains->add_option("inner_file", inner_file, "Covered ODD file")->required();

  auto* diff = app.add_subcommand("diff", "List attributes whose values differ");
  std::string a_file, b_file;
  diff->add_option("-i,--instance", instance, "Instance to evaluate in both files");
  diff->add_option("--tool-version", tool_version, "Tool version used for version gates");
  diff->add_option("a_file", a_file, "First ODD file")->required();
  diff->add_option("b_file", b_file, "Second ODD file")->required();

  auto* templates = app.add_subcommand("templates", "List bundled templates or print one");
  std::string template_name;
  templates->add_option("name", template_name, "Template to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*eval) {
      const oddl::Value tree = evaluate_file(eval_file, instance, tool_version, kExitFailed);
      oddl::RenderOptions opts;
      opts.format = *oddl::parse_render_format(format);
      opts.indent_width = indent;
      std::cout << oddl::render(tree, opts) << "\n";
      return kExitOk;
    }
    if (*within) {
      const oddl::Value tree = evaluate_file(odd_file, instance, tool_version, kExitError);
      const oddl::Scenario scenario = oddl::parse_scenario(read_or_fail(scenario_file));
      const oddl::Verdict verdict = oddl::scenario_within(tree, scenario, profile_from(profile_path));
      std::cout << oddl::to_json(verdict).dump(2) << "\n";
      return verdict.within ? kExitOk : kExitFailed;
    }
    if (*contains) {
      const oddl::Value outer = evaluate_file(outer_file, instance, tool_version, kExitError);
      const oddl::Value inner = evaluate_file(inner_file, instance, tool_version, kExitError);
      const oddl::ContainmentReport report = oddl::contains(outer, inner, profile_from(profile_path));
      std::cout << oddl::to_json(report).dump(2) << "\n";
      return report.contains ? kExitOk : kExitFailed;
    }
    if (*diff) {
      const oddl::Value a = evaluate_file(a_file, instance, tool_version, kExitError);
      const oddl::Value b = evaluate_file(b_file, instance, tool_version, kExitError);
      const auto entries = oddl::diff(a, b);
      std::cout << oddl::to_json(entries).dump(2) << "\n";
      return entries.empty() ? kExitOk : kExitFailed;
    }
    if (*templates) {
      if (template_name.empty()) {
        for (const auto& name : oddl::list_standard_templates()) {
          const auto asset = oddl::template_asset(name);
          std::cout << name << "\t" << oddl::standard_asset(name).file_name << "\tminToolVersion "
                    << asset.declared_min_tool_version << "\n";
        }
      } else {
        std::cout << oddl::standard_asset(template_name).source;
      }
      return kExitOk;
    }
  } catch (const Reported& r) {
    return r.code;
  } catch (const oddl::ConfigError& e) {
    std::cerr << "oddl: configuration error: " << e.what() << "\n";
  } catch (const oddl::ShapeMismatchError& e) {
    std::cerr << "oddl: shape mismatch: " << e.what() << "\n";
  } catch (const oddl::UnknownTemplateError& e) {
    std::cerr << "oddl: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "oddl: " << e.what() << "\n";
  }
  return kExitError;
}
