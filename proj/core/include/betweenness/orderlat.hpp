#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "betweenness/closures.hpp"
#include "betweenness/relation.hpp"
#include "betweenness/roads.hpp"

namespace btw {

/// A finite partial order as a boolean matrix: row x holds {y | x <= y}.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Throws invalid_poset unless `above` is reflexive, transitive and
  /// antisymmetric.
  FinitePoset(Carrier carrier, std::vector<Bits> above);

  /// Reflexive-transitive closure of the listed (x, y) pairs read as x <= y,
  /// then validated.
  static FinitePoset from_pairs(Carrier carrier,
                                const std::vector<std::pair<Label, Label>>& pairs);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool leq(Index x, Index y) const { return above_[x].test(y); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }
  const Bits& above(Index x) const { return above_[x]; }
  Bits below(Index x) const;

  /// Pairs x < y with nothing strictly in between.
  std::vector<std::pair<Index, Index>> covers() const;
  /// Every x < y.
  std::vector<std::pair<Index, Index>> strict_pairs() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  Carrier carrier_;
  std::vector<Bits> above_;
};

/// A finite nonempty lattice with precomputed meet and join tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  /// Throws invalid_lattice if some pair lacks a meet or a join.
  explicit FiniteLattice(FinitePoset poset);

  const FinitePoset& poset() const noexcept { return poset_; }
  const Carrier& carrier() const noexcept { return poset_.carrier(); }
  std::size_t size() const noexcept { return poset_.size(); }
  bool leq(Index x, Index y) const { return poset_.leq(x, y); }

  Index meet(Index x, Index y) const { return meet_[x * size() + y]; }
  Index join(Index x, Index y) const { return join_[x * size() + y]; }
  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }
  /// Empty input gives top.
  Index meet_all(std::span<const Index> xs) const;
  /// Empty input gives bottom.
  Index join_all(std::span<const Index> xs) const;

  friend bool operator==(const FiniteLattice&, const FiniteLattice&) = default;

 private:
  FinitePoset poset_;
  std::vector<Index> meet_;
  std::vector<Index> join_;
  Index bottom_ = 0;
  Index top_ = 0;
};

/// (a, y, b) iff a∧b <= y <= a∨b.
TernaryRelation betweenness_from_lattice(const FiniteLattice& lattice);

/// x <= y iff [y,beta] ⊆ [x,beta]. Throws not_r_relation, unknown_label, or
/// order_recovery (naming the pair) when two points share an interval.
FinitePoset recover_order(const TernaryRelation& rel, std::string_view beta);

struct BoundWitness {
  Label alpha;
  Label beta;

  friend bool operator==(const BoundWitness&, const BoundWitness&) = default;
};

/// Every ordered pair with [alpha,beta] = X whose intervals [x,beta] are
/// pairwise distinct.
std::vector<BoundWitness> detect_bounds(const TernaryRelation& rel);

struct ClassificationReport {
  Report linear;
  Report bounded;
  Report complete;
  Report modular;
  Report distributive;
  Report completely_distributive;
  Report boolean;
};

/// Flag-by-flag comparison of `holds`.
bool same_flags(const ClassificationReport& a, const ClassificationReport& b);

/// Lattice properties decided from interval data alone, relative to the
/// bound witness. Lattice-valued properties (modular, distributive, boolean)
/// also require the subset-intersection criterion. Throws invalid_witness,
/// and carrier_too_large above 12 points (subsets are enumerated).
ClassificationReport classify_via_betweenness(const TernaryRelation& rel,
                                              const BoundWitness& witness);

/// Textbook checks on the lattice itself: comparability, N5/M3 sublattice
/// search cross-checked against the modular and distributive laws,
/// complements. Independent of the betweenness route.
ClassificationReport classify_direct(const FiniteLattice& lattice);

struct Reflection {
  FiniteLattice lattice;
  std::vector<Index> map;  ///< input element -> reflection element
  std::vector<TraceStep> trace;
};

/// Antisymmetric closure of the lattice's betweenness, with the order read
/// back from the image of top. Throws order_recovery if that order is not a
/// lattice.
Reflection distributive_reflection(const FiniteLattice& lattice);

struct Completion {
  FiniteLattice lattice;
  std::vector<Index> embedding;  ///< poset element -> its principal cut
};

/// Lattice of cuts A = (A^u)^l ordered by inclusion. A cut equal to the
/// principal downset of x is labelled x; others are labelled by their
/// members, e.g. "{a,b}".
Completion dm_completion(const FinitePoset& poset);

/// All nonempty order-convex subsets as roads. Throws carrier_too_large
/// above 16 points.
RoadSystem convex_road_system(const FinitePoset& poset);

/// For each incomparable pair x, y: every z between them in the convex-road
/// betweenness must map into [q(x)∧q(y), q(x)∨q(y)] of the completion.
/// Witnesses are [x,y,z].
Report dm_betweenness_report(const FinitePoset& poset);

}  // namespace btw
