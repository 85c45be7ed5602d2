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

#include <iomanip>
#include <sstream>

#include <gtest/gtest.h>
#include <openssl/evp.h>

#include "test_support.hpp"

namespace oddl {
namespace {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

TEST(Taxonomy, ListsTheFourTemplatesInOrder) {
  const auto names = list_standard_templates();
  EXPECT_EQ(names, (std::vector<std::string>{"odd_template", "scen_template", "env_template",
                                             "dyn_template"}));
  EXPECT_EQ(names, list_standard_templates());
}

TEST(Taxonomy, LaneSpecificationClassBody) {
  const ModuleAst ast = load_standard_template("scen_template");
  const ClassDecl* cls = ast.find_class("Drivable_area_lane_specification");
  ASSERT_NE(cls, nullptr);
  std::vector<std::string> names;
  for (const auto& p : cls->properties) names.push_back(p.name);
  EXPECT_EQ(names, (std::vector<std::string>{"lane_dimensions", "lane_markings", "lane_type",
                                             "direction_of_travel", "speed_limit", "lane_usage"}));
}

TEST(Taxonomy, TopClassHasThreeParts) {
  const ModuleAst ast = load_standard_template("odd_template");
  const ClassDecl* odd = ast.find_class("odd");
  ASSERT_NE(odd, nullptr);
  ASSERT_EQ(odd->properties.size(), 3u);
  EXPECT_EQ(odd->properties[0].name, "scenery");
  EXPECT_EQ(odd->properties[1].name, "environment");
  EXPECT_EQ(odd->properties[2].name, "dynamic");
}

TEST(Taxonomy, UnknownTemplateIsAnError) {
  EXPECT_THROW(load_standard_template("nonexistent"), UnknownTemplateError);
  EXPECT_THROW(template_asset("nonexistent"), UnknownTemplateError);
}

TEST(Taxonomy, EveryAssetDeclaresItsMinimumVersion) {
  for (const auto& name : list_standard_templates()) {
    const TemplateAsset asset = template_asset(name);
    EXPECT_EQ(asset.declared_min_tool_version, "0.25.1") << name;
    EXPECT_FALSE(check_version_gate(asset.declared_min_tool_version, kToolVersion).has_value());
  }
}

TEST(Taxonomy, EmbeddedTextMatchesRecordedDigestAndSourceFile) {
  for (const auto& asset : kBundledAssets) {
    EXPECT_EQ(sha256_hex(asset.source), asset.sha256) << asset.name;
    const auto on_disk = read_file(std::filesystem::path(ODDL_ASSETS_DIR) / std::string(asset.file_name));
    ASSERT_TRUE(on_disk.has_value()) << asset.file_name;
    EXPECT_EQ(*on_disk, asset.source) << asset.file_name;
  }
}

TEST(Taxonomy, EveryTemplateSelfValidates) {
  for (const auto& name : list_standard_templates()) {
    const Evaluator evaluator(load_standard_graph(name));
    EXPECT_TRUE(evaluator.schema().problems().empty()) << name;
    for (const auto& cls : evaluator.schema().classes()) {
      // Classes whose closure has a defaultless leaf cannot stand alone; they
      // are checked through the instance tests instead.
      const EvalResult r = instantiate(evaluator.schema(), *cls);
      for (const auto& v : r.violations())
        EXPECT_EQ(v.kind, ViolationKind::MissingRequired)
            << cls->qualified_name() << ": " << format_violation(v);
    }
  }
}

TEST(Taxonomy, DefaultsSatisfyConstraints) {
  const auto& schema = testing::template_evaluator().schema();
  std::size_t constrained = 0;
  for (const auto& cls : schema.classes())
    for (const auto& p : cls->properties)
      if (p.bounds && p.default_value) {
        ++constrained;
        const double v = p.default_value->as_float().value;
        EXPECT_TRUE(v >= p.bounds->low && v <= p.bounds->high) << cls->owner_of(p);
      }
  EXPECT_GE(constrained, 1u);
}

TEST(Taxonomy, OnlyDirectionOfTravelLacksADefault) {
  const EvalResult r = instantiate(testing::template_evaluator().schema(), testing::odd_class());
  ASSERT_FALSE(r.ok());
  std::vector<std::string> paths;
  for (const auto& v : r.violations()) {
    EXPECT_EQ(v.kind, ViolationKind::MissingRequired);
    paths.push_back(v.property_path);
  }
  EXPECT_EQ(paths, (std::vector<std::string>{testing::lane("direction_of_travel"),
                                             testing::lane("speed_limit")}));
}

TEST(Taxonomy, StandardProfileMatchesTheShippedDocument) {
  const AnalysisProfile& p = standard_profile();
  EXPECT_EQ(p.comparator_for(testing::lane("speed_limit"), ValueKind::Float).kind, ComparatorKind::Leq);
  const Comparator dim =
      p.comparator_for(testing::lane("lane_dimensions.lane_dimension"), ValueKind::Float);
  EXPECT_EQ(dim.kind, ComparatorKind::EqTolerance);
  EXPECT_DOUBLE_EQ(dim.epsilon, 1e-9);
  EXPECT_EQ(p.comparator_for(testing::lane("lane_type.bus_lane"), ValueKind::Bool).kind,
            ComparatorKind::FlagInclusion);
  EXPECT_EQ(p.comparator_for(testing::lane("direction_of_travel"), ValueKind::Enum).kind,
            ComparatorKind::Eq);
}

}  // namespace
}  // namespace oddl
