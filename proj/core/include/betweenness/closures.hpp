#pragma once

#include <string>
#include <vector>

#include "betweenness/relation.hpp"

namespace btw {

/// Local glue rules whose least fixpoint defines a partition.
enum class GlueRule {
  /// A triple (r,s,t) with r ~ t puts r, s and t in one class.
  minimality,
  /// Triples (a,b,c) and (a',c',b') with a~a', b~b', c~c' put b and c in one
  /// class. Classes are compared modulo the current partition.
  antisymmetry,
};

struct TraceStep {
  std::string step;
  std::size_t carrier = 0;  ///< carrier size after the step
  std::size_t triples = 0;  ///< triple count after the step
  bool changed = false;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ClosureResult {
  TernaryRelation relation;
  /// From the input relation to `relation`; always monotone.
  RelMap quotient;
  std::vector<TraceStep> trace;
};

/// Adds (a,b,b) for all a,b and closes under mirroring: the least R1+R2
/// superset.
TernaryRelation l12(const TernaryRelation& rel);

/// Least equivalence closed under `rule`, computed with union-find.
Partition sim_partition(const TernaryRelation& rel, GlueRule rule);

/// Quotient by the minimality partition; the result satisfies R3.
ClosureResult l3(const TernaryRelation& rel);

/// Grows every interval [a,b] by the intervals of its members until stable
/// (all pairs updated together each round); the least R4 superset.
TernaryRelation l4(const TernaryRelation& rel);

/// l4 ∘ l3 ∘ l12. The result is an R-relation.
ClosureResult r_closure(const TernaryRelation& rel);

/// One antisymmetrisation: quotient by the antisymmetry partition. The
/// result is antisymmetric and keeps R1 and R2, but may lose R4.
ClosureResult antisym_step(const TernaryRelation& rel);

/// Alternates antisym_step and l4, starting with antisym_step, until a step
/// changes nothing and the relation is both antisymmetric and R4. Requires
/// R1 and R2 (throws not_r_relation otherwise); the output is an
/// antisymmetric R-relation.
ClosureResult antisymmetric_closure(const TernaryRelation& rel);

}  // namespace btw
