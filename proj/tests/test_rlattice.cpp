#include <gtest/gtest.h>

#include <cstdlib>

#include "betweenness/axioms.hpp"
#include "betweenness/error.hpp"
#include "betweenness/fixtures.hpp"
#include "betweenness/rlattice.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace btw;

namespace {

TernaryRelation with(const Carrier& c, std::vector<LabelTriple> ts) {
  TernaryRelation rel = bottom_relation(c);
  rel |= TernaryRelation(c, ts, true);
  return rel;
}

}  // namespace

TEST(Meet, Examples) {
  const Carrier c = gen::letters(3);
  const TernaryRelation rho = fixtures::tri();
  const TernaryRelation same[] = {rho, rho};
  EXPECT_EQ(meet(same), rho);
  const TernaryRelation with_bottom[] = {rho, bottom_relation(c)};
  EXPECT_EQ(meet(with_bottom), bottom_relation(c));
  const TernaryRelation pair[] = {with(c, {{"a", "b", "c"}}), with(c, {{"a", "c", "b"}})};
  EXPECT_EQ(meet(pair), bottom_relation(c));
}

TEST(Meet, Errors) {
  EXPECT_THROW((void)meet(std::span<const TernaryRelation>{}), Error);
  const TernaryRelation mismatch[] = {bottom_relation(gen::letters(2)), bottom_relation(gen::letters(3))};
  EXPECT_THROW((void)meet(mismatch), Error);
  const TernaryRelation non_r[] = {fixtures::ex7()};
  EXPECT_THROW((void)meet(non_r), Error);
}

TEST(Join, Examples) {
  const Carrier c = gen::letters(3);
  const TernaryRelation pair[] = {with(c, {{"a", "b", "c"}}), with(c, {{"a", "c", "b"}})};
  EXPECT_EQ(join(pair), fixtures::tri());
  const TernaryRelation rho = fixtures::tri();
  const TernaryRelation with_bottom[] = {rho, bottom_relation(c)};
  EXPECT_EQ(join(with_bottom), rho);
  const TernaryRelation with_top[] = {rho, top_relation(c)};
  EXPECT_EQ(join(with_top), top_relation(c));
}

TEST(Join, RandomJoinsAreUpperBoundsOnSameCarrier) {
  gen::Rng rng(20);
  for (int i = 0; i < 100; ++i) {
    const Carrier c = gen::letters(1 + rng() % 6);
    const TernaryRelation rels[] = {gen::random_r_relation(c, rng), gen::random_r_relation(c, rng),
                                    gen::random_r_relation(c, rng)};
    const TernaryRelation j = join(rels);
    EXPECT_TRUE(is_r_relation(j));
    for (const auto& r : rels) EXPECT_TRUE(r.subset_of(j));
  }
}

TEST(Pullback, Examples) {
  const TernaryRelation tri = fixtures::tri();
  const std::vector<Index> id{0, 1, 2};
  EXPECT_EQ(pullback(tri.carrier(), id, tri), tri);

  const Carrier pq({"p", "q"});
  const std::vector<Index> constant{0, 0};
  EXPECT_EQ(pullback(pq, constant, bottom_relation(Carrier({"a"}))), top_relation(pq));

  const std::vector<Index> inclusion{0, 1};
  EXPECT_EQ(pullback(gen::letters(2), inclusion, tri), bottom_relation(gen::letters(2)));
}

TEST(Pullback, Errors) {
  const std::vector<Index> bad{0, 5};
  EXPECT_THROW((void)pullback(gen::letters(2), bad, fixtures::tri()), Error);
  const std::vector<Index> ok(7, 0);
  EXPECT_THROW((void)pullback(gen::letters(7), ok, fixtures::ex7()), Error);
}

// The (a,b,a) triples dropped from the preimage never take R4 with them.
TEST(Pullback, SubtractionKeepsR4) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const TernaryRelation& rho : enumerate_relations(gen::letters(n), RelationFilter::all_r)) {
      for (const auto& f : gen::all_functions(4, n)) {
        const TernaryRelation p = pullback(gen::letters(4), f, rho);
        EXPECT_TRUE(is_r_relation(p));
        EXPECT_TRUE(is_monotone(RelMap(p, rho, f)).holds);
      }
    }
  }
}

TEST(InitialLift, Examples) {
  const TernaryRelation tri = fixtures::tri();
  EXPECT_EQ(initial_lift(Cone{tri.carrier(), {Leg{{0, 1, 2}, tri}}}), tri);
  EXPECT_EQ(initial_lift(Cone{gen::letters(3), {}}), top_relation(gen::letters(3)));
  const TernaryRelation point = bottom_relation(Carrier({"o"}));
  EXPECT_EQ(initial_lift(Cone{gen::letters(3), {Leg{{0, 0, 0}, point}, Leg{{0, 0, 0}, point}}}),
            top_relation(gen::letters(3)));
}

TEST(InitialLift, IsGreatestRelationMakingLegsMonotone) {
  gen::Rng rng(21);
  const Carrier apex = gen::letters(3);
  const auto candidates = enumerate_relations(apex, RelationFilter::all_r);
  for (int i = 0; i < 40; ++i) {
    Cone cone{apex, {}};
    for (int l = 0; l < 2; ++l) {
      const Carrier tc = gen::letters(1 + rng() % 3);
      std::vector<Index> f;
      for (std::size_t k = 0; k < 3; ++k) f.push_back(rng() % tc.size());
      cone.legs.push_back(Leg{f, gen::random_r_relation(tc, rng)});
    }
    const TernaryRelation lift = initial_lift(cone);
    for (const Leg& leg : cone.legs) EXPECT_TRUE(is_monotone(RelMap(lift, leg.target, leg.assignment)).holds);
    for (const TernaryRelation& sigma : candidates) {
      bool all = true;
      for (const Leg& leg : cone.legs) all = all && is_monotone(RelMap(sigma, leg.target, leg.assignment)).holds;
      if (all) {
        EXPECT_TRUE(sigma.subset_of(lift));
      }
    }
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_relations(gen::letters(0), RelationFilter::all_r).size(), 1U);
  EXPECT_EQ(enumerate_relations(gen::letters(1), RelationFilter::all_r).size(), 1U);
  EXPECT_EQ(enumerate_relations(gen::letters(2), RelationFilter::all_r).size(), 1U);
  EXPECT_EQ(enumerate_relations(gen::letters(3), RelationFilter::all_r).size(), 8U);
}

TEST(Enumerate, MatchesBruteForce) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto expected = oracle::r_relations(n);
    const auto got = enumerate_relations(gen::letters(n), RelationFilter::all_r);
    ASSERT_EQ(got.size(), expected.size()) << n;
    std::set<oracle::TripleSet> a(expected.begin(), expected.end());
    std::set<oracle::TripleSet> b;
    for (const auto& r : got) b.insert(oracle::triples_of(r));
    EXPECT_EQ(a, b);
  }
}

TEST(Enumerate, FiltersAreConsistent) {
  const Carrier c = gen::letters(4);
  const auto all = enumerate_relations(c, RelationFilter::all_r);
  const auto anti = enumerate_relations(c, RelationFilter::antisymmetric_r);
  const auto r3 = enumerate_relations(c, RelationFilter::without_r4);
  EXPECT_LT(anti.size(), all.size());
  EXPECT_LT(all.size(), r3.size());
  for (const auto& r : anti) EXPECT_TRUE(is_r_relation(r) && satisfies(r, Axiom::antisymmetry));
  for (const auto& r : r3) {
    EXPECT_TRUE(bottom_relation(c).subset_of(r));
    EXPECT_TRUE(r.subset_of(top_relation(c)));
  }
}

TEST(Enumerate, GuardAndNames) {
  try {
    (void)enumerate_relations(gen::letters(5), RelationFilter::all_r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::carrier_too_large);
  }
  EXPECT_EQ(parse_filter("ANTISYM_R"), RelationFilter::antisymmetric_r);
  EXPECT_STREQ(to_string(RelationFilter::without_r4), "R3_ONLY");
  EXPECT_THROW((void)parse_filter("NONE"), Error);
}

// Reindexing along a map that identifies the ends of a triple is not functorial.
TEST(Pullback, CompositionSplitsWhenEndsAreIdentified) {
  const Carrier x = gen::letters(3);
  const Carrier y({"p", "q"});
  const TernaryRelation rho = bottom_relation(Carrier({"z"}));
  const std::vector<Index> f{0, 1, 0};
  const std::vector<Index> g{0, 0};
  const std::vector<Index> gf{0, 0, 0};
  const TernaryRelation direct = pullback(x, gf, rho);
  const TernaryRelation composed = pullback(x, f, pullback(y, g, rho));
  EXPECT_EQ(direct, top_relation(x));
  EXPECT_TRUE(direct.contains("a", "b", "c"));
  EXPECT_FALSE(composed.contains("a", "b", "c"));
  EXPECT_TRUE(composed.subset_of(direct));
}

TEST(Pullback, FunctorialWhenEitherMapIsInjective) {
  gen::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const bool f_injective = i % 2 == 0;
    const std::size_t nx = 1 + rng() % 3, ny = nx + rng() % 2;
    const std::size_t nz = f_injective ? 1 + rng() % 4 : ny;
    std::vector<Index> f(nx), g(ny), gf(nx);
    for (std::size_t a = 0; a < nx; ++a) f[a] = f_injective ? a : rng() % ny;
    for (std::size_t b = 0; b < ny; ++b) g[b] = f_injective ? rng() % nz : b;
    for (std::size_t a = 0; a < nx; ++a) gf[a] = g[f[a]];
    const TernaryRelation rho = gen::random_r_relation(gen::digits(nz), rng);
    EXPECT_EQ(pullback(gen::letters(nx), gf, rho),
              pullback(gen::letters(nx), f, pullback(gen::letters(ny), g, rho)));
  }
}
