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

#include "acdc/evaluator.hpp"
#include "acdc/naive_evaluator.hpp"
#include "acdc/policy_parser.hpp"
#include "acdc/scenarios.hpp"
#include "support/generators.hpp"

namespace acdc {
namespace {

using K = VertexKind;
using L = RelationLabel;

BoundPolicy P(std::string_view name) { return corpus_policy(name)->bound(); }

std::vector<BoundPolicy> p1_to_p9() {
  std::vector<BoundPolicy> out;
  for (int i = 1; i <= 9; ++i) out.push_back(P("p" + std::to_string(i)));
  return out;
}

TEST(Evaluate, ConjunctionOfP1ToP9OnFig2) {
  ProvGraph g = build_encapsulate_event("Bob");
  EXPECT_TRUE(evaluate(conjoin(p1_to_p9()), g).satisfied);
  for (const auto& p : p1_to_p9()) EXPECT_TRUE(evaluate(p, g).satisfied) << pretty_print(p.ast);
}

TEST(Evaluate, EmptyGraph) {
  EXPECT_FALSE(evaluate(P("p1"), ProvGraph{}).satisfied);
  EXPECT_TRUE(evaluate(P("p3"), ProvGraph{}).satisfied);
  EXPECT_FALSE(evaluate_naive(P("p1"), ProvGraph{}));
  EXPECT_TRUE(evaluate_naive(P("p3"), ProvGraph{}));
}

TEST(Evaluate, ForeignPlaintextBreaksP4) {
  ProvGraph g = build_encapsulate_event("Bob")
                    .add_vertex("Mallory", K::AccountAgent)
                    .add_vertex("Plaintext_Mallory", K::DataEntity)
                    .add_edge("Plaintext_Mallory", "Mallory", L::WasAttributedTo)
                    .add_edge("Encapsulate", "Plaintext_Mallory", L::Used);
  Verdict v = evaluate(P("p4"), g);
  EXPECT_FALSE(v.satisfied);
  EXPECT_FALSE(evaluate_naive(P("p4"), g));
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->at("d"), "Plaintext_Mallory");
  EXPECT_TRUE(evaluate(P("p2"), g).satisfied);
}

TEST(Evaluate, WitnessFromLeadingExistentials) {
  Verdict v = evaluate(P("p1"), build_encapsulate_event("Bob"));
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (Assignment{{"k", "Key_Bob"}}));
  EXPECT_FALSE(v.counterexample);
}

TEST(Evaluate, UniversalViolationGivesFirstCounterexample) {
  ProvGraph g = ProvGraph{}
                    .add_vertex("a", K::DataEntity)
                    .add_vertex("b", K::DataEntity)
                    .add_vertex("c", K::DataEntity)
                    .add_edge("b", "a", L::WasDerivedFrom);
  auto f = parse_policy("forall x: data_entity . forall y: data_entity . edge(x, y, WasDerivedFrom) or edge(y, x, WasDerivedFrom)");
  Verdict v = evaluate(bind(f, {}), g);
  EXPECT_FALSE(v.satisfied);
  ASSERT_TRUE(v.counterexample);
  // Lexicographic order: (a, a) is the first refuting pair.
  EXPECT_EQ(*v.counterexample, (Assignment{{"x", "a"}, {"y", "a"}}));
}

TEST(Evaluate, UnresolvedNamesAreFalseWithDiagnostics) {
  ProvGraph g = build_encapsulate_event("Bob");
  BoundPolicy b = bind(parse_policy("exists k: key_entity . edge(Encapsulate, k, Used)"), {});
  Verdict v = evaluate(b, g);
  EXPECT_FALSE(v.satisfied);
  ASSERT_EQ(v.diagnostics.size(), 1u);
  EXPECT_NE(v.diagnostics[0].find("Encapsulate"), std::string::npos);

  BoundPolicy neg = bind(parse_policy("not member(Bob, blacklist)"), {});
  Verdict w = evaluate(neg, g);
  EXPECT_TRUE(w.satisfied);
  EXPECT_EQ(w.diagnostics.size(), 2u);
}

TEST(Evaluate, ConstantPointingOutsideGraphIsHarmless) {
  Environment env;
  env.constants["Encapsulate"] = "Elsewhere";
  BoundPolicy b = bind(parse_policy("exists k: key_entity . edge(Encapsulate, k, Used)"), env);
  Verdict v = evaluate(b, build_encapsulate_event("Bob"));
  EXPECT_FALSE(v.satisfied);
  EXPECT_TRUE(v.diagnostics.empty());
}

TEST(Evaluate, InvalidGraphsRejected) {
  for (const auto& [name, g] : invalid_corpus_graphs()) {
    try {
      (void)evaluate(P("p1"), g);
      FAIL() << name;
    } catch (const InvalidGraphError& e) {
      EXPECT_EQ(e.code(), Errc::InvalidGraph);
      EXPECT_EQ(e.typing_violations().size() + e.cycles().size(), 1u) << name;
    }
    EXPECT_THROW((void)evaluate_naive(P("p1"), g), InvalidGraphError);
  }
}

TEST(Conjoin, SingletonIsIdentity) {
  BoundPolicy p = P("p3");
  BoundPolicy c = conjoin({p});
  EXPECT_TRUE(structurally_equal(c.ast, p.ast));
  EXPECT_EQ(c.resolved, p.resolved);
}

TEST(Conjoin, EmptyListRejected) {
  try {
    (void)conjoin({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyList);
  }
}

TEST(Conjoin, ConflictingBindings) {
  auto f = parse_policy("edge(a, b, Used)");
  Environment e1, e2;
  e1.constants = {{"a", "x"}, {"b", "y"}};
  e2.constants = {{"a", "z"}, {"b", "y"}};
  try {
    (void)conjoin({bind(f, e1), bind(f, e2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConflictingBinding);
  }
  Environment s1, s2;
  s1.sets["S"] = {"a"};
  s2.sets["S"] = {"b"};
  auto m = parse_policy("member(a, S)");
  EXPECT_THROW((void)conjoin({bind(m, s1), bind(m, s2)}), Error);
}

TEST(Conjoin, RightFolded) {
  auto c = conjoin({P("p1"), P("p2"), P("p9")});
  const auto* top = c.ast->as<Connective>();
  ASSERT_TRUE(top);
  EXPECT_TRUE(structurally_equal(top->lhs, P("p1").ast));
  EXPECT_TRUE(top->rhs->as<Connective>());
}

TEST(Naive, AgreesOnEveryCorpusPairing) {
  for (const auto& [pname, policy] : testing::corpus_bindings()) {
    for (const auto& [gname, g] : corpus_graphs()) {
      EXPECT_EQ(evaluate(policy, g).satisfied, evaluate_naive(policy, g)) << pname << " on " << gname;
    }
  }
}

TEST(Witness, SoundOnCorpus) {
  for (const auto& [pname, policy] : testing::corpus_bindings()) {
    for (const auto& [gname, g] : corpus_graphs()) {
      Verdict v = evaluate(policy, g);
      const Formula* body = policy.ast.get();
      while (const auto* q = body->as<Quantified>()) {
        if (q->kind != policy.ast->as<Quantified>()->kind) break;
        body = q->body.get();
      }
      if (v.witness) {
        EXPECT_TRUE(evaluate_open(policy, *body, g, *v.witness)) << pname << "/" << gname;
      }
      if (v.counterexample) {
        EXPECT_FALSE(evaluate_open(policy, *body, g, *v.counterexample)) << pname << "/" << gname;
      }
    }
  }
}

}  // namespace
}  // namespace acdc
