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

// Randomized laws of the evaluator. Every case is reproducible from the
// fixed seeds below.

#include <gtest/gtest.h>

#include "acdc/evaluator.hpp"
#include "acdc/naive_evaluator.hpp"
#include "support/generators.hpp"

namespace acdc {
namespace {

using testing::FormulaGen;
using testing::Rng;

struct Case {
  ProvGraph graph;
  Environment env;
};

Case random_case(Rng& rng) {
  Case c;
  c.graph = testing::random_graph(rng, 12);
  c.env = testing::random_environment(rng, c.graph);
  return c;
}

const Formula& strip_leading_run(const Formula& f) {
  const auto* top = f.as<Quantified>();
  const Formula* body = &f;
  while (const auto* q = body->as<Quantified>()) {
    if (q->kind != top->kind) break;
    body = q->body.get();
  }
  return *body;
}

TEST(Laws, OracleEquivalence) {
  Rng rng(101);
  int agree = 0, satisfied = 0;
  for (int i = 0; i < 1500; ++i) {
    Case c = random_case(rng);
    FormulaGen gen(rng, {.depth = 3});
    BoundPolicy p = bind(gen.closed(), c.env);
    bool fast = evaluate(p, c.graph).satisfied;
    bool slow = evaluate_naive(p, c.graph);
    EXPECT_EQ(fast, slow) << pretty_print(p.ast);
    agree += fast == slow;
    satisfied += fast;
  }
  EXPECT_EQ(agree, 1500);
  // Both outcomes must be well represented for the comparison to mean much.
  EXPECT_GT(satisfied, 150);
  EXPECT_LT(satisfied, 1350);
}

TEST(Laws, QuantifierDuality) {
  Rng rng(102);
  for (int i = 0; i < 600; ++i) {
    Case c = random_case(rng);
    FormulaGen gen(rng, {.depth = 2});
    std::string v = gen.fresh_var();
    Sort s = gen.random_sort();
    FormulaPtr b = gen.open({v});

    auto lhs = bind(negate(exists(v, s, b)), c.env);
    auto rhs = bind(forall(v, s, negate(b)), c.env);
    EXPECT_EQ(evaluate(lhs, c.graph).satisfied, evaluate(rhs, c.graph).satisfied)
        << pretty_print(lhs.ast);

    auto lhs2 = bind(negate(forall(v, s, b)), c.env);
    auto rhs2 = bind(exists(v, s, negate(b)), c.env);
    EXPECT_EQ(evaluate(lhs2, c.graph).satisfied, evaluate(rhs2, c.graph).satisfied)
        << pretty_print(lhs2.ast);
  }
}

TEST(Laws, ConjunctionHomomorphism) {
  Rng rng(103);
  for (int i = 0; i < 600; ++i) {
    Case c = random_case(rng);
    FormulaGen gen(rng, {.depth = 3});
    BoundPolicy a = bind(gen.closed(), c.env);
    BoundPolicy b = bind(gen.closed(), c.env);
    bool both = evaluate(conjoin({a, b}), c.graph).satisfied;
    EXPECT_EQ(both, evaluate(a, c.graph).satisfied && evaluate(b, c.graph).satisfied);
  }
}

TEST(Laws, ExistentialPositiveMonotonicity) {
  Rng rng(104);
  int premises = 0;
  for (int i = 0; i < 50000 && premises < 600; ++i) {
    Case c = random_case(rng);
    FormulaGen gen(rng, {.depth = 3, .existential_positive = true, .quantifier_bias = 0.5});
    BoundPolicy p = bind(gen.closed(), c.env);
    if (!evaluate(p, c.graph).satisfied) continue;
    ++premises;
    ProvGraph bigger = testing::extend_graph(rng, c.graph, testing::uniform(rng, 0, 4));
    ASSERT_TRUE(is_subgraph(c.graph, bigger));
    EXPECT_TRUE(evaluate(p, bigger).satisfied) << pretty_print(p.ast);
  }
  EXPECT_GE(premises, 500);
}

TEST(Laws, WitnessSoundness) {
  Rng rng(105);
  int witnesses = 0, counterexamples = 0;
  for (int i = 0; i < 1000; ++i) {
    Case c = random_case(rng);
    FormulaGen gen(rng, {.depth = 3, .quantifier_bias = 0.6});
    BoundPolicy p = bind(gen.closed(), c.env);
    Verdict v = evaluate(p, c.graph);
    if (v.witness) {
      ++witnesses;
      EXPECT_TRUE(v.satisfied);
      EXPECT_TRUE(evaluate_open(p, strip_leading_run(*p.ast), c.graph, *v.witness));
    }
    if (v.counterexample) {
      ++counterexamples;
      EXPECT_FALSE(v.satisfied);
      EXPECT_FALSE(evaluate_open(p, strip_leading_run(*p.ast), c.graph, *v.counterexample));
    }
  }
  EXPECT_GT(witnesses, 50);
  EXPECT_GT(counterexamples, 50);
}

}  // namespace
}  // namespace acdc
