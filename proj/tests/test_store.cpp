// Copyright 2026 The ACDC Provenance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "acdc/scenarios.hpp"
#include "acdc/store.hpp"
#include "support/generators.hpp"

namespace acdc {
namespace {

namespace fs = std::filesystem;
using K = VertexKind;
using L = RelationLabel;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Errc load_error(std::string_view doc) {
  try {
    (void)load_graph(doc);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "loaded: " << doc;
  return Errc::EmptyId;
}

TEST(Store, Fig2RoundTrip) {
  ProvGraph g = build_encapsulate_event("Bob");
  std::string bytes = save_graph(g);
  EXPECT_EQ(load_graph(bytes), g);
  EXPECT_EQ(save_graph(load_graph(bytes)), bytes);
  EXPECT_EQ(save_graph(build_encapsulate_event("Bob")), bytes);
}

TEST(Store, EmptyGraph) {
  EXPECT_EQ(load_graph(R"({"version":"acdc-prov/1","vertices":[],"edges":[]})"), ProvGraph{});
}

TEST(Store, AttrsSurvive) {
  ProvGraph g = ProvGraph{}.add_vertex("d", K::DataEntity, {{"label", "Ballot #1"}});
  ProvGraph back = load_graph(save_graph(g));
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.find("d")->attrs.at("label"), "Ballot #1");
}

TEST(Store, VertexOrderInDocumentIsIrrelevant) {
  const char* a = R"({"version":"acdc-prov/1",
    "vertices":[{"id":"x","kind":"data_entity"},{"id":"y","kind":"data_entity"}],
    "edges":[{"src":"x","dst":"y","label":"WasDerivedFrom"}]})";
  const char* b = R"({"edges":[{"label":"WasDerivedFrom","dst":"y","src":"x"}],
    "vertices":[{"kind":"data_entity","id":"y"},{"id":"x","kind":"data_entity"}],
    "version":"acdc-prov/1"})";
  EXPECT_EQ(save_graph(load_graph(a)), save_graph(load_graph(b)));
}

TEST(Store, Rejections) {
  EXPECT_EQ(load_error(R"({"version":"acdc-prov/1","vertices":[{"id":"a","kind":"activity"},{"id":"d","kind":"data_entity"}],
      "edges":[{"src":"a","dst":"d","label":"Generated"}]})"),
            Errc::UnknownLabel);
  EXPECT_EQ(load_error(R"({"version":"acdc-prov/1","vertices":[{"id":"a","kind":"robot"}],"edges":[]})"),
            Errc::UnknownKind);
  EXPECT_EQ(load_error(R"({"version":"acdc-prov/2","vertices":[],"edges":[]})"),
            Errc::UnsupportedVersion);
  EXPECT_EQ(load_error(R"({"vertices":[],"edges":[]})"), Errc::MalformedDocument);
  EXPECT_EQ(load_error(R"({"version":"acdc-prov/1","vertices":{},"edges":[]})"),
            Errc::MalformedDocument);
  EXPECT_EQ(load_error(R"({"version":"acdc-prov/1","vertices":[{"id":"","kind":"activity"}],"edges":[]})"),
            Errc::MalformedDocument);
  EXPECT_EQ(load_error(R"({"version":"acdc-prov/1","vertices":[{"id":"a","kind":"activity"},{"id":"a","kind":"activity"}],"edges":[]})"),
            Errc::DuplicateId);
  EXPECT_EQ(load_error(R"({"version":"acdc-prov/1","vertices":[{"id":"a","kind":"activity"}],
      "edges":[{"src":"a","dst":"zz","label":"Used"}]})"),
            Errc::MissingVertex);
  EXPECT_EQ(load_error("[1, 2"), Errc::MalformedDocument);
  EXPECT_EQ(load_error("[]"), Errc::MalformedDocument);
}

TEST(Store, ErrorsNameTheLocation) {
  try {
    (void)load_graph(R"({"version":"acdc-prov/1","vertices":[{"id":"a","kind":"activity"},{"id":"b","kind":"account_agent"}],
        "edges":[{"src":"a","dst":"b","label":"WasAssociatedWith"}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TypeViolation);
    EXPECT_EQ(e.detail().rfind("/edges/0", 0), 0u) << e.detail();
  }
  try {
    (void)load_graph(R"({"version":"acdc-prov/1","vertices":[{"id":"a","kind":"activity","attrs":{"n":1}}],"edges":[]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(e.detail().find("/vertices/0/attrs/n"), std::string::npos) << e.detail();
  }
}

TEST(Store, UncheckedLoadKeepsViolations) {
  for (const auto& [name, g] : invalid_corpus_graphs()) {
    std::string bytes = save_graph(g);
    EXPECT_THROW((void)load_graph(bytes), Error) << name;
    EXPECT_EQ(load_graph_unchecked(bytes), g) << name;
  }
}

TEST(Store, RandomGraphsRoundTrip) {
  testing::Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    ProvGraph g = testing::random_graph(rng);
    if (testing::coin(rng, 0.3) && !g.empty())
      g = std::move(g).add_vertex("attr_holder", K::DataEntity, {{"note", std::to_string(i)}});
    std::string bytes = save_graph(g);
    ProvGraph back = load_graph(bytes);
    ASSERT_EQ(back, g) << bytes;
    EXPECT_EQ(save_graph(back), bytes);
  }
}

TEST(Store, EnvironmentRoundTrip) {
  Environment env;
  env.constants = {{"Bob", "Bob"}, {"Encapsulate", "Enc-1"}};
  env.sets = {{"blacklist", {"Bob", "Eve"}}, {"empty", {}}};
  EXPECT_EQ(load_environment(save_environment(env)), env);
  EXPECT_EQ(load_environment("{}"), Environment{});
  EXPECT_THROW((void)load_environment(R"({"sets":{"s":"x"}})"), Error);
}

TEST(Store, VerdictJson) {
  Verdict v;
  v.satisfied = true;
  v.witness = Assignment{{"k", "Key_Bob"}};
  auto j = nlohmann::json::parse(verdict_to_json(v));
  EXPECT_TRUE(j["satisfied"].get<bool>());
  EXPECT_EQ(j["witness"]["k"], "Key_Bob");
  EXPECT_TRUE(j["counterexample"].is_null());
}

TEST(Corpus, FilesMatchBuilders) {
  fs::path root = ACDC_CORPUS_DIR;
  for (const auto& [name, g] : corpus_graphs()) {
    fs::path p = root / "graphs" / (name + ".json");
    ASSERT_TRUE(fs::exists(p)) << p;
    EXPECT_EQ(load_graph(slurp(p)), g) << name;
    EXPECT_EQ(slurp(p), save_graph(g)) << name;
  }
  for (const auto& [name, g] : invalid_corpus_graphs())
    EXPECT_EQ(load_graph_unchecked(slurp(root / "invalid" / (name + ".json"))), g) << name;
  for (const auto& p : corpus()) {
    EXPECT_EQ(slurp(root / "policies" / (p.name + ".pol")), p.source) << p.name;
    EXPECT_EQ(load_environment(slurp(root / "policies" / (p.name + ".env.json"))), p.default_env)
        << p.name;
  }
}

}  // namespace
}  // namespace acdc
