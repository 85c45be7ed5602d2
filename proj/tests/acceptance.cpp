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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "subprocess.hpp"
#include "test_support.hpp"

namespace oddl::acceptance {
namespace {

using testing::lane;

/// Failure details for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && problems_.size() < 10) problems_.push_back(what);
    failed_ |= !ok;
  }
  void time_limit(double elapsed_ms, double limit_ms) {
    std::ostringstream os;
    os << "runtime " << elapsed_ms << " ms exceeds " << limit_ms << " ms";
    expect(elapsed_ms < limit_ms, os.str());
  }
  bool failed() const { return failed_; }
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  bool failed_ = false;
  std::vector<std::string> problems_;
};

std::string sample(const std::string& name) { return (std::filesystem::path(ODDL_SAMPLES_DIR) / name).string(); }

const Evaluator& ev() { return testing::template_evaluator(); }

const std::vector<gen::LeafSpec>& leaves() {
  static const auto all = gen::leaves_of(testing::odd_class());
  return all;
}

EvalResult build(const gen::Assignment& a) {
  gen::Assignment full = gen::required_leaves();
  for (const auto& [k, v] : a) full[k] = v;
  return instantiate(ev().schema(), testing::odd_class(), parse_amendment(gen::block_text(full)));
}

EvalResult amend_with(const Value& base, const gen::Assignment& a) {
  return ev().amend(base, parse_amendment(gen::block_text(a)));
}

void ac1(Check& c) {
  const auto fixture = read_file(std::filesystem::path(ODDL_TEST_DATA_DIR) / "lane_specification_expected.json");
  c.expect(fixture.has_value(), "fixture missing");
  if (!fixture) return;
  const std::string expected = oracle::strip_json_whitespace(*fixture);

  const Value tree = testing::eval_ok(testing::odd1_source(testing::kOdd1LaneSpec));
  const std::string lib = oracle::member_fragment(render_json(tree), "drivable_area_lane_specification");
  c.expect(oracle::strip_json_whitespace(lib) == expected, "library rendering differs: " + lib);

#ifdef ODDL_CLI_PATH
  const auto r = testing::run_cli(ODDL_CLI_PATH, {"eval", "-f", "json", sample("ODD1_test.odd")});
  c.expect(r.exit_code == 0, "cli exit " + std::to_string(r.exit_code) + ": " + r.err);
  const std::string cli = oracle::member_fragment(r.out, "drivable_area_lane_specification");
  c.expect(oracle::strip_json_whitespace(cli) == expected, "cli rendering differs: " + cli);
#endif
}

void ac2(Check& c) {
  const std::string header = "Type constraint 'isBetween(0, speed_limit_global)' violated.";
  const std::string location = "at ODD.scen_template#Drivable_area_lane_specification.speed_limit "
                               "(bundled:///scen_template.odd, line ";
  testing::MemFs fs;
  fs.add("test.odd", testing::odd1_with_speed("31.0"));
  const ModuleGraph graph = fs.load("test.odd");
  const EvalResult r = evaluate(graph, "odd1");
  c.expect(!r, "speed 31.0 evaluated successfully");
  if (!r) {
    const std::string text = format_violations(r.violations(), lookup_in(graph));
    c.expect(text.find(header) != std::string::npos, "library report lacks header: " + text);
    c.expect(text.find("Value: 31.0") != std::string::npos, "library report lacks value: " + text);
    c.expect(text.find(location) != std::string::npos, "library report lacks location: " + text);
  }
#ifdef ODDL_CLI_PATH
  const auto cli = testing::run_cli(ODDL_CLI_PATH, {"eval", sample("ODD1_31.odd")});
  c.expect(cli.exit_code != 0, "cli exit 0");
  c.expect(cli.err.find(header) != std::string::npos, "cli report lacks header: " + cli.err);
  c.expect(cli.err.find("Value: 31.0") != std::string::npos, "cli report lacks value: " + cli.err);
  c.expect(cli.err.find(location) != std::string::npos, "cli report lacks location: " + cli.err);
#endif
}

void ac3(Check& c) {
  for (int round = 0; round < 2; ++round) {
    const EvalResult with_default = testing::evaluate_text(testing::odd1_with_speed("15.0"));
    c.expect(bool(with_default), "instance without lane_usage failed");
    if (with_default) {
      const Value* usage = with_default.value().at_path(lane("lane_usage"));
      c.expect(usage && usage->kind() == ValueKind::Bool && usage->as_bool(), "lane_usage is not true");
    }
    const EvalResult missing = testing::evaluate_text(testing::odd1_source("        speed_limit = 15.0\n"));
    c.expect(!missing, "instance without direction_of_travel succeeded");
    if (!missing) {
      bool found = false;
      for (const auto& v : missing.violations())
        found |= v.kind == ViolationKind::MissingRequired && v.property_path == lane("direction_of_travel");
      c.expect(found, "no MISSING_REQUIRED for direction_of_travel:\n" + format_violations(missing.violations()));
    }
  }
}

void ac4(Check& c) {
  std::mt19937 rng(4004u);
  std::vector<std::pair<std::vector<std::string>, const ResolvedClass*>> objects;
  std::vector<std::string> prefix;
  gen::collect_objects(testing::odd_class(), prefix, objects);
  const EvalResult base = build({});
  c.expect(bool(base), "base tree failed");
  if (!base) return;
  std::uniform_int_distribution<std::size_t> pick_object(0, objects.size() - 1);
  std::uniform_int_distribution<int> pick_literal(0, 2);
  for (int i = 0; i < 200; ++i) {
    auto [path, cls] = objects[pick_object(rng)];
    std::string name;
    do {
      name = "undeclared_" + std::to_string(rng() % 100000);
    } while (cls->find(name));
    path.push_back(name);
    gen::Assignment a = gen::random_assignment(leaves(), rng, 3);
    const char* literals[] = {"1.0", "true", "\"text\""};
    a[path] = literals[pick_literal(rng)];
    const EvalResult r = amend_with(base.value(), a);
    bool named = false;
    if (!r)
      for (const auto& v : r.violations())
        named |= v.kind == ViolationKind::UnknownProperty && v.property_path == gen::dotted(path);
    c.expect(!r, "illegal amendment accepted: " + gen::dotted(path));
    c.expect(named, "no UNKNOWN_PROPERTY naming " + gen::dotted(path));
  }
}

void ac5(Check& c) {
  std::mt19937 rng(5005u);
  for (int i = 0; i < 500; ++i) {
    const EvalResult base = build(gen::random_assignment(leaves(), rng));
    const gen::Assignment a = gen::random_assignment(leaves(), rng);
    gen::Assignment b = gen::random_assignment(leaves(), rng);
    for (const auto& [k, _] : a) b.erase(k);
    c.expect(bool(base), "random base failed");
    if (!base) continue;
    const std::string before = render_json(base.value());
    const EvalResult once = amend_with(base.value(), a);
    c.expect(bool(once), "random amendment failed");
    if (!once) continue;
    c.expect(render_json(base.value()) == before, "base changed after amend (pair " + std::to_string(i) + ")");
    const EvalResult twice = amend_with(once.value(), a);
    c.expect(twice && twice.value() == once.value(), "amend not idempotent (pair " + std::to_string(i) + ")");
    if (b.empty()) continue;
    const EvalResult ab = amend_with(once.value(), b);
    const EvalResult only_b = amend_with(base.value(), b);
    if (!ab || !only_b) {
      c.expect(false, "disjoint amendment failed");
      continue;
    }
    const EvalResult ba = amend_with(only_b.value(), a);
    c.expect(ba && ba.value() == ab.value(), "disjoint amendments do not commute (pair " + std::to_string(i) + ")");
    c.expect(render_json(base.value()) == before, "base changed after chained amends");
  }
}

void ac6(Check& c) {
  const std::vector<std::string> flags = {"traffic_lane", "bus_lane", "cyclists_lane"};
  const std::vector<std::string> directions = {"right_hand_travel", "left_hand_travel"};
  std::vector<Value> family;
  for (int speed = 0; speed <= 30; speed += 5)
    for (unsigned subset = 0; subset < 8; ++subset)
      for (const auto& dir : directions) {
        std::string body = "direction_of_travel = \"" + dir + "\"\nspeed_limit = " + format_float(speed) +
                           "\nlane_type {\n";
        for (std::size_t f = 0; f < flags.size(); ++f)
          body += flags[f] + " = " + ((subset >> f) & 1 ? "true" : "false") + "\n";
        body += "}\n";
        family.push_back(testing::eval_ok(testing::odd1_source(body)));
      }

  std::vector<Scenario> grid;
  std::vector<double> speeds = {-1.0, 31.0};
  for (int k = 0; k <= 12; ++k) speeds.push_back(2.5 * k);
  for (double s : speeds)
    for (unsigned bits = 0; bits < 8; ++bits)
      for (const auto& dir : directions) {
        Scenario sc;
        sc.assignments.emplace_back(lane("speed_limit"), s);
        sc.assignments.emplace_back(lane("direction_of_travel"), dir);
        for (std::size_t f = 0; f < flags.size(); ++f)
          sc.assignments.emplace_back(lane("lane_type." + flags[f]), bool((bits >> f) & 1));
        grid.push_back(std::move(sc));
      }

  const std::size_t n = family.size();
  std::vector<std::vector<bool>> admits(n, std::vector<bool>(grid.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < grid.size(); ++s) admits[i][s] = scenario_within(family[i], grid[s]).within;

  std::vector<std::vector<bool>> holds(n, std::vector<bool>(n));
  std::size_t disagreements = 0, pairs = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool oracle = true;
      for (std::size_t s = 0; s < grid.size() && oracle; ++s)
        if (admits[b][s] && !admits[a][s]) oracle = false;
      holds[a][b] = contains(family[a], family[b]).contains;
      ++pairs;
      if (holds[a][b] != oracle) ++disagreements;
    }
  c.expect(disagreements == 0,
           std::to_string(disagreements) + " of " + std::to_string(pairs) + " pairs disagree with the grid");
  for (std::size_t a = 0; a < n; ++a) c.expect(holds[a][a], "not reflexive at " + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (holds[a][b])
        for (std::size_t d = 0; d < n; ++d)
          if (holds[b][d]) c.expect(holds[a][d], "not transitive");
}

void ac7(Check& c) {
  std::vector<Value> trees;
  trees.push_back(testing::eval_ok(testing::odd1_source(testing::kOdd1LaneSpec)));
  const auto events = read_file(sample("events.odd"));
  c.expect(events.has_value(), "events sample missing");
  if (events) trees.push_back(testing::eval_ok(*events, "odd_events"));
  std::mt19937 rng(7007u);
  for (int i = 0; i < 100; ++i) {
    const EvalResult r = build(gen::random_assignment(leaves(), rng, 12));
    if (r) trees.push_back(r.value());
  }
  c.expect(trees.size() == 102, "random trees failed to evaluate");
  for (const auto& t : trees) {
    const std::string json = render_json(t);
    c.expect(oracle::parse_yaml(render_yaml(t)) == oracle::parse_json(json), "YAML and JSON disagree");
    c.expect(render_plantuml(t) == "@startjson\n" + json + "\n@endjson", "PlantUML framing differs");
  }
}

void ac8(Check& c) {
  auto try_dimension = [&](double d) {
    return bool(testing::evaluate_text(testing::odd1_source(
        "lane_dimensions { lane_dimension = " + format_float(d) +
        " }\ndirection_of_travel = \"right_hand_travel\"\nspeed_limit = 15.0\n")));
  };
  auto try_speed = [&](double s) { return bool(testing::evaluate_text(testing::odd1_with_speed(format_float(s)))); };
  for (double d : {2.7, 3.2}) c.expect(try_dimension(d), "lane_dimension " + format_float(d) + " rejected");
  for (double d : {2.7 - 1e-9, 3.2 + 1e-9}) c.expect(!try_dimension(d), "lane_dimension " + format_float(d) + " admitted");
  for (double s : {0.0, 30.0}) c.expect(try_speed(s), "speed_limit " + format_float(s) + " rejected");
  for (double s : {-1e-9, 30.0 + 1e-9}) c.expect(!try_speed(s), "speed_limit " + format_float(s) + " admitted");
}

void ac9(Check& c) {
  const auto names = list_standard_templates();
  c.expect(names.size() == 4, "expected four bundled templates");
  for (const auto& name : names) {
    try {
      const Evaluator evaluator(load_standard_graph(name));
      c.expect(evaluator.schema().problems().empty(), name + " has schema problems");
      for (const auto& cls : evaluator.schema().classes()) {
        const EvalResult r = instantiate(evaluator.schema(), *cls);
        for (const auto& v : r.violations())
          c.expect(v.kind == ViolationKind::MissingRequired, name + ": " + format_violation(v));
      }
    } catch (const std::exception& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
}

struct Criterion {
  const char* id;
  const char* name;
  double limit_ms;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace oddl::acceptance

int main() {
  using namespace oddl::acceptance;
  const std::vector<Criterion> criteria = {
      {"AC1", "lane specification JSON matches fixture", 1000, ac1},
      {"AC2", "speed_limit 31.0 constraint diagnostic", 1000, ac2},
      {"AC3", "defaults and required fields", 1000, ac3},
      {"AC4", "override-only amendments (200 illegal)", 0, ac4},
      {"AC5", "immutability, idempotence, disjoint order (500 pairs)", 30000, ac5},
      {"AC6", "containment vs scenario grid, reflexive, transitive", 60000, ac6},
      {"AC7", "JSON/YAML/PlantUML equivalence", 0, ac7},
      {"AC8", "inclusive constraint boundaries", 0, ac8},
      {"AC9", "bundled templates self-consistent", 1000, ac9},
  };
  int failures = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (crit.limit_ms > 0) check.time_limit(ms, crit.limit_ms);
    std::printf("[%s] %s %s (%.1f ms)\n", check.failed() ? "FAIL" : "PASS", crit.id, crit.name, ms);
    for (const auto& p : check.problems()) std::printf("    %s\n", p.c_str());
    failures += check.failed();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
