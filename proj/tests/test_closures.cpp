#include <gtest/gtest.h>

#include "betweenness/error.hpp"
#include "betweenness//axioms.hpp"
#include "betweenness/closures.hpp"
#include "betweenness/fixtures.hpp"
#include "betweenness/orderlat.hpp"
#include "betweenness/rlattice.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace btw;

namespace {

std::vector<std::size_t> blocks_of(const Partition& p) {
  std::vector<std::size_t> out;
  for (Index i = 0; i < p.carrier().size(); ++i) out.push_back(p.block_of(i));
  return out;
}

std::vector<std::string> step_names(const ClosureResult& r) {
  std::vector<std::string> out;
  for (const TraceStep& s : r.trace) out.push_back(s.step);
  return out;
}

}  // namespace

TEST(L12, Examples) {
  const Carrier two = gen::letters(2);
  EXPECT_EQ(l12(TernaryRelation(two)), bottom_relation(two));

  const std::vector<LabelTriple> abc{{"a", "b", "c"}};
  const Carrier three = gen::letters(3);
  TernaryRelation expected = bottom_relation(three);
  expected |= TernaryRelation(three, abc, true);
  EXPECT_EQ(l12(TernaryRelation(three, abc)), expected);
  EXPECT_EQ(l12(fixtures::tri()), fixtures::tri());
}

TEST(L12, MatchesHornHull) {
  gen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const TernaryRelation rel = gen::random_relation(gen::letters(n), 0.1, rng);
    const auto hull = oracle::horn_hull(n, oracle::triples_of(rel), {.r1 = true, .r2 = true});
    EXPECT_EQ(oracle::triples_of(l12(rel)), hull);
  }
}

TEST(SimPartition, Ex7AntisymmetryGluesD1D2) {
  const Partition p = sim_partition(fixtures::ex7(), GlueRule::antisymmetry);
  EXPECT_EQ(p.nontrivial_blocks(), (std::vector<std::vector<Label>>{{"d1", "d2"}}));
}

TEST(SimPartition, AddingAxcGluesXWithC) {
  TernaryRelation rel = fixtures::relation_1();
  rel.insert_mirrored(rel.carrier().index_of("a"), rel.carrier().index_of("x"), rel.carrier().index_of("c"));
  const Partition p = sim_partition(rel, GlueRule::antisymmetry);
  EXPECT_EQ(p.nontrivial_blocks(), (std::vector<std::vector<Label>>{{"c", "x"}}));
}

TEST(SimPartition, MinimalityGluesDegenerateTriple) {
  TernaryRelation rel = bottom_relation(gen::letters(2));
  rel.insert(0, 1, 0);
  const Partition p = sim_partition(rel, GlueRule::minimality);
  EXPECT_EQ(p.block_count(), 1U);
}

TEST(SimPartition, MatchesLiteralRecursions) {
  gen::Rng rng(10);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 4;
    TernaryRelation rel = gen::random_relation(gen::letters(n), i % 2 ? 0.08 : 0.25, rng);
    if (i % 3 == 0) rel = l12(rel);
    const auto t = oracle::triples_of(rel);
    EXPECT_TRUE(oracle::same_partition(blocks_of(sim_partition(rel, GlueRule::minimality)),
                                       oracle::literal_sim_omega(n, t)));
    EXPECT_TRUE(oracle::same_partition(blocks_of(sim_partition(rel, GlueRule::antisymmetry)),
                                       oracle::literal_sim_antisym(n, t)));
  }
}

TEST(L3, RRelationIsUnchanged) {
  const ClosureResult r = l3(fixtures::tri());
  EXPECT_EQ(r.relation, fixtures::tri());
  EXPECT_TRUE(r.quotient.is_identity());
}

TEST(L3, DegenerateTripleCollapses) {
  TernaryRelation rel = bottom_relation(gen::letters(2));
  rel.insert(0, 1, 0);
  const ClosureResult r = l3(rel);
  EXPECT_EQ(r.relation.order(), 1U);
  EXPECT_TRUE(is_monotone(r.quotient).holds);
}

TEST(L3, OutputSatisfiesR3AndKeepsR1R2) {
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const TernaryRelation rel = l12(gen::random_relation(gen::letters(1 + rng() % 5), 0.1, rng));
    const ClosureResult r = l3(rel);
    EXPECT_TRUE(satisfies(r.relation, Axiom::r3));
    EXPECT_TRUE(satisfies(r.relation, Axiom::r1));
    EXPECT_TRUE(satisfies(r.relation, Axiom::r2));
    EXPECT_TRUE(is_monotone(r.quotient).holds);
  }
}

TEST(L4, RelationOneGainsAxcAndTheTriplesItForces) {
  const TernaryRelation before = fixtures::relation_1();
  const TernaryRelation after = l4(before);
  EXPECT_TRUE(after.contains("a", "x", "c"));
  EXPECT_TRUE(after.contains("c", "x", "a"));
  EXPECT_TRUE(after.contains("a", "b", "x"));
  EXPECT_TRUE(after.contains("a", "d1", "x"));
  EXPECT_EQ(after.count(), before.count() + 6);
  EXPECT_TRUE(satisfies(after, Axiom::r4));
}

TEST(L4, FixedOnRRelations) {
  const TernaryRelation c3 = betweenness_from_lattice(fixtures::c3());
  EXPECT_EQ(l4(c3), c3);
  gen::Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const TernaryRelation rel = gen::random_r_relation(gen::letters(5), rng);
    EXPECT_EQ(l4(rel), rel);
  }
}

TEST(L4, MatchesHornHull) {
  gen::Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const TernaryRelation rel = gen::random_relation(gen::letters(n), 0.12, rng);
    const auto hull = oracle::horn_hull(n, oracle::triples_of(rel), {.r4 = true});
    EXPECT_EQ(oracle::triples_of(l4(rel)), hull);
  }
}

TEST(L4, MonotoneInTriples) {
  gen::Rng rng(16);
  for (int i = 0; i < 100; ++i) {
    const TernaryRelation small = gen::random_relation(gen::letters(4), 0.1, rng);
    TernaryRelation big = small;
    big |= gen::random_relation(gen::letters(4), 0.05, rng);
    EXPECT_TRUE(l4(small).subset_of(l4(big)));
    EXPECT_TRUE(l12(small).subset_of(l12(big)));
  }
}

TEST(RClosure, EmptyGivesBottom) {
  const Carrier c = gen::letters(4);
  const ClosureResult r = r_closure(TernaryRelation(c));
  EXPECT_EQ(r.relation, bottom_relation(c));
  EXPECT_TRUE(r.quotient.is_identity());
  EXPECT_EQ(step_names(r), (std::vector<std::string>{"L12", "L3", "L4"}));
}

TEST(RClosure, FixedExactlyOnRRelations) {
  gen::Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const TernaryRelation rel = (i % 2) ? gen::random_r_relation(gen::letters(n), rng)
                                        : gen::random_relation(gen::letters(n), 0.2, rng);
    const ClosureResult r = r_closure(rel);
    EXPECT_TRUE(is_r_relation(r.relation));
    EXPECT_TRUE(is_monotone(r.quotient).holds);
    EXPECT_EQ(r.relation == rel, is_r_relation(rel));
  }
}

TEST(RClosure, Idempotent) {
  gen::Rng rng(18);
  for (int i = 0; i < 100; ++i) {
    const TernaryRelation rel = gen::random_relation(gen::letters(1 + rng() % 5), 0.1, rng);
    const ClosureResult once = r_closure(rel);
    const ClosureResult twice = r_closure(once.relation);
    EXPECT_EQ(twice.relation, once.relation);
    EXPECT_TRUE(twice.quotient.is_identity());
    EXPECT_EQ(l4(l4(rel)), l4(rel));
    EXPECT_EQ(l12(l12(rel)), l12(rel));
    EXPECT_EQ(l3(l3(l12(rel)).relation).relation, l3(l12(rel)).relation);
  }
}

TEST(AntisymStep, Ex7GivesRelationOne) {
  const ClosureResult r = antisym_step(fixtures::ex7());
  EXPECT_EQ(r.relation, fixtures::relation_1());
  EXPECT_EQ(r.quotient("d2"), "d1");
  EXPECT_TRUE(r.trace.front().changed);
}

TEST(AntisymStep, TriGluesBAndC) {
  const ClosureResult r = antisym_step(fixtures::tri());
  EXPECT_EQ(r.relation.carrier().labels(), (std::vector<Label>{"a", "b"}));
  EXPECT_EQ(r.quotient("c"), "b");
  EXPECT_TRUE(satisfies(r.relation, Axiom::antisymmetry));
}

TEST(AntisymStep, AntisymmetricInputIsFixed) {
  const TernaryRelation c3 = betweenness_from_lattice(fixtures::c3());
  const ClosureResult r = antisym_step(c3);
  EXPECT_EQ(r.relation, c3);
  EXPECT_TRUE(r.quotient.is_identity());
  EXPECT_FALSE(r.trace.front().changed);
}

TEST(AntisymmetricClosure, Ex7Pipeline) {
  const ClosureResult r = antisymmetric_closure(fixtures::ex7());
  EXPECT_EQ(step_names(r), (std::vector<std::string>{"L_A", "L4", "L_A", "L4"}));
  EXPECT_TRUE(r.trace[0].changed);
  EXPECT_TRUE(r.trace[1].changed);
  EXPECT_TRUE(r.trace[2].changed);
  EXPECT_FALSE(r.trace[3].changed);
  EXPECT_EQ(r.relation.carrier().labels(), (std::vector<Label>{"a", "b", "c", "d1", "y"}));
  EXPECT_EQ(r.quotient("x"), "c");
  EXPECT_EQ(r.quotient("d2"), "d1");
  EXPECT_TRUE(is_r_relation(r.relation));
  EXPECT_TRUE(satisfies(r.relation, Axiom::antisymmetry));
  EXPECT_TRUE(is_monotone(r.quotient).holds);
}

TEST(AntisymmetricClosure, TriHasTwoPoints) {
  const ClosureResult r = antisymmetric_closure(fixtures::tri());
  EXPECT_EQ(r.relation.order(), 2U);
  EXPECT_EQ(r.quotient("b"), r.quotient("c"));
  EXPECT_NE(r.quotient("a"), r.quotient("b"));
  EXPECT_TRUE(is_monotone(r.quotient).holds);
}

TEST(AntisymmetricClosure, AntisymmetricRRelationTakesOneStep) {
  const ClosureResult r = antisymmetric_closure(betweenness_from_lattice(fixtures::b4()));
  EXPECT_EQ(r.trace.size(), 1U);
  EXPECT_TRUE(r.quotient.is_identity());
}

TEST(AntisymmetricClosure, ExtendedFixtureNeedsTwoRounds) {
  const ClosureResult r = antisymmetric_closure(fixtures::ex7_extended());
  std::size_t glue_rounds = 0;
  for (const TraceStep& s : r.trace) glue_rounds += (s.step == "L_A" && s.changed) ? 1 : 0;
  EXPECT_GE(glue_rounds, 2U);
  EXPECT_GE(r.trace.size(), 4U);
  EXPECT_TRUE(is_r_relation(r.relation));
  EXPECT_TRUE(satisfies(r.relation, Axiom::antisymmetry));
}

TEST(AntisymmetricClosure, RejectsNonReflexiveInput) {
  EXPECT_THROW((void)antisymmetric_closure(TernaryRelation(gen::letters(2))), Error);
}

TEST(AntisymmetricClosure, RandomInputsGiveAntisymmetricRRelations) {
  gen::Rng rng(19);
  for (int i = 0; i < 150; ++i) {
    const TernaryRelation rel = gen::random_r_relation(gen::letters(1 + rng() % 6), rng);
    const ClosureResult r = antisymmetric_closure(rel);
    EXPECT_TRUE(is_r_relation(r.relation));
    EXPECT_TRUE(satisfies(r.relation, Axiom::antisymmetry));
    EXPECT_TRUE(is_monotone(r.quotient).holds);
    const ClosureResult again = antisymmetric_closure(r.relation);
    EXPECT_EQ(again.relation, r.relation);
    EXPECT_TRUE(again.quotient.is_identity());
    for (std::size_t k = 1; k < r.trace.size(); ++k) {
      const TraceStep& prev = r.trace[k - 1];
      const TraceStep& cur = r.trace[k];
      if (cur.changed) {
        EXPECT_TRUE(cur.carrier < prev.carrier || cur.triples > prev.triples);
      }
    }
  }
}
