#include "betweenness/closures.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include "betweenness/axioms.hpp"
#include "betweenness/error.hpp"

namespace btw {
namespace {

using DisjointSets = boost::disjoint_sets_with_storage<>;

Partition to_partition(const Carrier& carrier, DisjointSets& sets) {
  std::vector<std::size_t> ids(carrier.size());
  for (Index i = 0; i < ids.size(); ++i) ids[i] = sets.find_set(i);
  return Partition(carrier, ids);
}

bool glue_minimality_round(const TernaryRelation& rel, DisjointSets& sets) {
  bool changed = false;
  rel.for_each_triple([&](const Triple& t) {
    const Index r = sets.find_set(t.a);
    if (r != sets.find_set(t.c)) return;
    if (r != sets.find_set(t.b)) {
      sets.union_set(t.a, t.b);
      changed = true;
    }
  });
  return changed;
}

bool glue_antisymmetry_round(const TernaryRelation& rel, DisjointSets& sets) {
  const std::size_t n = rel.order();
  std::vector<Index> root(n);
  for (Index i = 0; i < n; ++i) root[i] = sets.find_set(i);
  // Relation induced on class roots by the partition at the start of the round.
  Bits induced(n * n * n);
  const auto at = [n](Index a, Index b, Index c) { return (a * n + b) * n + c; };
  rel.for_each_triple([&](const Triple& t) { induced.set(at(root[t.a], root[t.b], root[t.c])); });
  bool changed = false;
  rel.for_each_triple([&](const Triple& t) {
    const Index b = root[t.b];
    const Index c = root[t.c];
    if (b == c || !induced.test(at(root[t.a], c, b))) return;
    if (sets.find_set(t.b) != sets.find_set(t.c)) {
      sets.union_set(t.b, t.c);
      changed = true;
    }
  });
  return changed;
}

TraceStep record(std::string name, const TernaryRelation& rel, bool changed) {
  return TraceStep{std::move(name), rel.order(), rel.count(), changed};
}

RelMap same_carrier_map(const TernaryRelation& from, const TernaryRelation& to) {
  return RelMap(from, to, RelMap::identity(from).assignment());
}

}  // namespace

TernaryRelation l12(const TernaryRelation& rel) {
  TernaryRelation out = rel;
  out |= bottom_relation(rel.carrier());
  rel.for_each_triple([&](const Triple& t) { out.insert(t.c, t.b, t.a); });
  return out;
}

Partition sim_partition(const TernaryRelation& rel, GlueRule rule) {
  DisjointSets sets(rel.order());
  const auto round = rule == GlueRule::minimality ? glue_minimality_round : glue_antisymmetry_round;
  while (round(rel, sets)) {
  }
  return to_partition(rel.carrier(), sets);
}

ClosureResult l3(const TernaryRelation& rel) {
  const Partition part = sim_partition(rel, GlueRule::minimality);
  Quotient q = quotient_relation(rel, part);
  const bool changed = !part.is_discrete();
  TraceStep step = record("L3", q.relation, changed);
  return ClosureResult{std::move(q.relation), std::move(q.map), {std::move(step)}};
}

TernaryRelation l4(const TernaryRelation& rel) {
  const std::size_t n = rel.order();
  std::vector<Bits> intervals(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) intervals[a * n + b] = rel.middles(a, b);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Bits> next = intervals;
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      const Bits& current = intervals[ab];
      for (auto c = current.find_first(); c != Bits::npos; c = current.find_next(c)) {
        for (auto d = current.find_first(); d != Bits::npos; d = current.find_next(d)) {
          next[ab] |= intervals[c * n + d];
        }
      }
      grew = grew || next[ab] != current;
    }
    intervals = std::move(next);
  }
  TernaryRelation out(rel.carrier());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Bits& mid = intervals[a * n + b];
      for (auto x = mid.find_first(); x != Bits::npos; x = mid.find_next(x)) out.insert(a, x, b);
    }
  }
  return out;
}

ClosureResult r_closure(const TernaryRelation& rel) {
  std::vector<TraceStep> trace;
  TernaryRelation first = l12(rel);
  trace.push_back(record("L12", first, first != rel));
  ClosureResult third = l3(first);
  trace.push_back(third.trace.front());
  TernaryRelation fourth = l4(third.relation);
  trace.push_back(record("L4", fourth, fourth != third.relation));
  RelMap to_first = same_carrier_map(rel, first);
  RelMap to_fourth = same_carrier_map(third.relation, fourth);
  RelMap quotient = compose(compose(to_first, third.quotient), to_fourth);
  return ClosureResult{std::move(fourth), std::move(quotient), std::move(trace)};
}

ClosureResult antisym_step(const TernaryRelation& rel) {
  const Partition part = sim_partition(rel, GlueRule::antisymmetry);
  Quotient q = quotient_relation(rel, part);
  TraceStep step = record("L_A", q.relation, !part.is_discrete());
  return ClosureResult{std::move(q.relation), std::move(q.map), {std::move(step)}};
}

ClosureResult antisymmetric_closure(const TernaryRelation& rel) {
  if (!satisfies(rel, Axiom::r1) || !satisfies(rel, Axiom::r2)) {
    throw Error(ErrorCode::not_r_relation,
                "antisymmetric closure needs a reflexive, mirror-closed input");
  }
  const std::size_t n = rel.order();
  const std::size_t max_steps = 2 * (n + n * n * n + 1);
  ClosureResult result{rel, RelMap::identity(rel), {}};
  for (std::size_t steps = 0; steps < max_steps; steps += 2) {
    ClosureResult glued = antisym_step(result.relation);
    const bool glued_changed = glued.trace.front().changed;
    result.quotient = compose(result.quotient, glued.quotient);
    result.relation = std::move(glued.relation);
    result.trace.push_back(glued.trace.front());
    if (!glued_changed && satisfies(result.relation, Axiom::r4)) return result;

    TernaryRelation closed = l4(result.relation);
    const bool closed_changed = closed != result.relation;
    result.quotient = compose(result.quotient, same_carrier_map(result.relation, closed));
    result.relation = std::move(closed);
    result.trace.push_back(record("L4", result.relation, closed_changed));
    if (!closed_changed) return result;
  }
  throw Error(ErrorCode::internal, "antisymmetric closure did not stabilise within its bound");
}

}  // namespace btw
