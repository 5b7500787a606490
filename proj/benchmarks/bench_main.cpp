#include <benchmark/benchmark.h>

#include <random>

#include "betweenness/axioms.hpp"
#include "betweenness/closures.hpp"
#include "betweenness/fixtures.hpp"
#include "betweenness/fraisse.hpp"
#include "betweenness/orderlat.hpp"
#include "betweenness/roads.hpp"

using namespace btw;

namespace {

Carrier labels(std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(1000 + i));
  return Carrier(out);
}

// Betweenness of a random road system with n/2 roads of about half the points.
TernaryRelation road_relation(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<Index>> roads;
  for (Index i = 0; i < n; ++i) roads.push_back({i});
  for (std::size_t r = 0; r < n / 2; ++r) {
    std::vector<Index> road;
    for (Index i = 0; i < n; ++i)
      if (coin(rng)) road.push_back(i);
    roads.push_back(road);
  }
  std::vector<Index> all(n);
  for (Index i = 0; i < n; ++i) all[i] = i;
  roads.push_back(all);
  return relation_from_roads(RoadSystem(labels(n), roads));
}

TernaryRelation sparse_relation(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  TernaryRelation rel(labels(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (coin(rng)) rel.insert(a, b, c);
  return rel;
}

void BM_CheckR4(benchmark::State& state) {
  const TernaryRelation rel = road_relation(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom(rel, Axiom::r4, 1));
}
BENCHMARK(BM_CheckR4)->RangeMultiplier(2)->Range(8, 64);

void BM_L4(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const TernaryRelation rel = l12(sparse_relation(n, 2.0 / static_cast<double>(n * n), 2));
  for (auto _ : state) benchmark::DoNotOptimize(l4(rel));
}
BENCHMARK(BM_L4)->RangeMultiplier(2)->Range(8, 64);

void BM_RClosure(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const TernaryRelation rel = sparse_relation(n, 1.0 / static_cast<double>(n * n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(r_closure(rel));
}
BENCHMARK(BM_RClosure)->RangeMultiplier(2)->Range(8, 64);

void BM_AntisymmetricClosure(benchmark::State& state) {
  const TernaryRelation rel = road_relation(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(antisymmetric_closure(rel));
}
BENCHMARK(BM_AntisymmetricClosure)->RangeMultiplier(2)->Range(8, 32);

void BM_AntisymmetricClosureEx7(benchmark::State& state) {
  const TernaryRelation rel = fixtures::ex7_extended();
  for (auto _ : state) benchmark::DoNotOptimize(antisymmetric_closure(rel));
}
BENCHMARK(BM_AntisymmetricClosureEx7);

void BM_CanonicalForm(benchmark::State& state) {
  const TernaryRelation rel = road_relation(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(rel));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 8, 2);

void BM_ClassifyViaBetweenness(benchmark::State& state) {
  const FiniteLattice l = fixtures::n5();
  const TernaryRelation rel = betweenness_from_lattice(l);
  const BoundWitness w{l.carrier()[l.bottom()], l.carrier()[l.top()]};
  for (auto _ : state) benchmark::DoNotOptimize(classify_via_betweenness(rel, w));
}
BENCHMARK(BM_ClassifyViaBetweenness);

void BM_FraisseChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fraisse_chain(3, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_FraisseChain)->DenseRange(1, 2);

}  // namespace

BENCHMARK_MAIN();
