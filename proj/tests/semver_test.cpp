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

#include <gtest/gtest.h>

#include "oddl/evaluator.hpp"

namespace oddl {
namespace {

TEST(VersionGate, EqualVersionsPass) { EXPECT_FALSE(check_version_gate("0.25.1", "0.25.1")); }

TEST(VersionGate, AbsentDeclarationPasses) { EXPECT_FALSE(check_version_gate(std::nullopt, "0.25.1")); }

TEST(VersionGate, NewerRequirementFails) {
  const auto v = check_version_gate("9.0.0", "0.25.1");
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, ViolationKind::VersionGate);
  EXPECT_EQ(v->offending_value, "9.0.0");
}

TEST(VersionGate, MalformedStringsAreTypeMismatches) {
  for (const char* bad : {"0.25", "v1.0.0", "1.0.0-", "01.0.0", "1..0", ""}) {
    const auto v = check_version_gate(std::string(bad), "1.0.0");
    ASSERT_TRUE(v.has_value()) << bad;
    EXPECT_EQ(v->kind, ViolationKind::TypeMismatch) << bad;
  }
  const auto bad_tool = check_version_gate("1.0.0", "one");
  ASSERT_TRUE(bad_tool.has_value());
  EXPECT_EQ(bad_tool->kind, ViolationKind::TypeMismatch);
}

TEST(SemVer, PrecedenceFollowsTheReferenceOrdering) {
  const std::vector<std::string> ordered = {"1.0.0-alpha",  "1.0.0-alpha.1", "1.0.0-alpha.beta",
                                            "1.0.0-beta",   "1.0.0-beta.2",  "1.0.0-beta.11",
                                            "1.0.0-rc.1",   "1.0.0",         "1.0.1",
                                            "1.1.0",        "1.10.0",        "2.0.0"};
  for (std::size_t i = 0; i < ordered.size(); ++i)
    for (std::size_t j = 0; j < ordered.size(); ++j) {
      const auto a = parse_semver(ordered[i]);
      const auto b = parse_semver(ordered[j]);
      ASSERT_TRUE(a && b);
      EXPECT_EQ(*a < *b, i < j) << ordered[i] << " vs " << ordered[j];
    }
}

TEST(SemVer, BuildMetadataIsIgnored) {
  EXPECT_EQ(*parse_semver("1.2.3+build.7"), *parse_semver("1.2.3"));
  EXPECT_FALSE(check_version_gate("1.0.0+anything", "1.0.0"));
}

TEST(SemVer, PrereleaseOfToolVersionIsOlderThanRelease) {
  EXPECT_TRUE(check_version_gate("1.0.0", "1.0.0-rc.1").has_value());
}

}  // namespace
}  // namespace oddl
