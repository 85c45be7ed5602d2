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

#include "test_support.hpp"

namespace oddl {
namespace {

using testing::MemFs;

std::vector<std::string> module_names(const ModuleGraph& g) {
  std::vector<std::string> out;
  for (const auto& m : g) out.push_back(m->ast.module_name);
  return out;
}

TEST(Imports, BundledTopTemplateHasFourModules) {
  const ModuleGraph g = load_standard_graph("odd_template");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.entry().ast.module_name, "ODD.ODD_template");
  EXPECT_NE(g.find("ODD.scen_template"), nullptr);
  EXPECT_NE(g.find("ODD.env_template"), nullptr);
  EXPECT_NE(g.find("ODD.dyn_template"), nullptr);
  EXPECT_EQ(g.entry().import_aliases.at("scen_template"), "ODD.scen_template");
}

TEST(Imports, ModuleWithoutImportsIsAlone) {
  MemFs fs;
  fs.add("a.odd", "class A {\n x : Float = 1.0\n}\n");
  const ModuleGraph g = fs.load("a.odd");
  EXPECT_EQ(module_names(g), std::vector<std::string>{"a"});
}

TEST(Imports, DependenciesComeBeforeImporters) {
  MemFs fs;
  fs.add("a.odd", "import \"b.odd\"\nimport \"c.odd\"\n")
      .add("b.odd", "import \"c.odd\"\n")
      .add("c.odd", "class C {}\n");
  EXPECT_EQ(module_names(fs.load("a.odd")), (std::vector<std::string>{"c", "b", "a"}));
}

TEST(Imports, CycleIsReportedWithItsPath) {
  MemFs fs;
  fs.add("a.odd", "import \"b.odd\"\n").add("b.odd", "import \"a.odd\"\n");
  try {
    fs.load("a.odd");
    FAIL() << "expected an import cycle";
  } catch (const ImportError& e) {
    EXPECT_NE(std::string(e.what()).find("a -> b -> a"), std::string::npos) << e.what();
    EXPECT_EQ(e.span().file_uri, "file:///mem/b.odd");
  }
}

TEST(Imports, MissingFileNamesTheImportSite) {
  MemFs fs;
  fs.add("a.odd", "\nimport \"nowhere.odd\"\n");
  try {
    fs.load("a.odd");
    FAIL();
  } catch (const ImportError& e) {
    EXPECT_EQ(e.span().line, 2u);
    EXPECT_NE(std::string(e.what()).find("nowhere.odd"), std::string::npos);
  }
}

TEST(Imports, PolicyRejectsPathsOutsideTheRoots) {
  MemFs fs;
  fs.add("a.odd", "import \"../etc/secret.odd\"\n");
  try {
    fs.load("a.odd");
    FAIL();
  } catch (const ImportError& e) {
    EXPECT_NE(std::string(e.what()).find("/etc/secret.odd"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("policy"), std::string::npos) << e.what();
  }
}

TEST(Imports, PklExtensionMapsToOdd) {
  MemFs fs;
  fs.add("a.odd", "import \"b.pkl\"\n").add("b.odd", "class B {}\n");
  EXPECT_EQ(fs.load("a.odd").size(), 2u);
}

TEST(Imports, LocalFilesShadowBundledOnes) {
  MemFs fs;
  fs.add("a.odd", "import \"scen_template.odd\"\n")
      .add("scen_template.odd", "module local.scen\nclass scenery {}\n");
  const ModuleGraph g = fs.load("a.odd");
  EXPECT_NE(g.find("local.scen"), nullptr);
  EXPECT_EQ(g.find("ODD.scen_template"), nullptr);
}

TEST(Imports, BundledFallbackCanBeDisabled) {
  MemFs fs;
  fs.add("a.odd", "import \"ODD_template.odd\"\n");
  ImportPolicy policy = fs.policy();
  policy.allow_bundled = false;
  EXPECT_THROW(load_module_graph("/mem/a.odd", fs.reader(), policy), ImportError);
}

TEST(Imports, DuplicateModuleNamesAreRejected) {
  MemFs fs;
  fs.add("a.odd", "import \"b.odd\"\nimport \"c.odd\"\n")
      .add("b.odd", "module same\n")
      .add("c.odd", "module same\n");
  EXPECT_THROW(fs.load("a.odd"), ImportError);
}

TEST(Imports, SharedDependencyLoadedOnce) {
  MemFs fs;
  fs.add("a.odd", "import \"b.odd\"\nimport \"c.odd\"\n")
      .add("b.odd", "import \"d.odd\"\n")
      .add("c.odd", "import \"d.odd\"\n")
      .add("d.odd", "class D {}\n");
  EXPECT_EQ(fs.load("a.odd").size(), 4u);
}

TEST(Imports, SourceLookupByUri) {
  const ModuleGraph g = load_standard_graph("odd_template");
  const auto src = g.source_for("bundled:///scen_template.odd");
  ASSERT_TRUE(src.has_value());
  EXPECT_NE(src->find("speed_limit_global"), std::string_view::npos);
}

TEST(Imports, FileUrisUseTheFileScheme) {
  EXPECT_EQ(file_uri_for("/tmp/x.odd"), "file:///tmp/x.odd");
  EXPECT_EQ(path_from_uri("file:///tmp/x.odd"), std::filesystem::path("/tmp/x.odd"));
}

}  // namespace
}  // namespace oddl
