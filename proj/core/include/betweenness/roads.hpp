#pragma once

#include <vector>

#include "betweenness/relation.hpp"

namespace btw {

/// A family of subsets ("roads") of a carrier. Roads are kept deduplicated
/// and sorted by their member lists; validity is a separate check.
class RoadSystem {
 public:
  RoadSystem() = default;
  /// Throws unknown_label for a road that leaves the carrier.
  RoadSystem(Carrier carrier, const std::vector<std::vector<Label>>& roads);
  RoadSystem(Carrier carrier, std::vector<std::vector<Index>> roads);

  const Carrier& carrier() const noexcept { return carrier_; }
  const std::vector<std::vector<Index>>& roads() const noexcept { return roads_; }
  std::vector<std::vector<Label>> labelled_roads() const;

  friend bool operator==(const RoadSystem&, const RoadSystem&) = default;

 private:
  void normalise();

  Carrier carrier_;
  std::vector<std::vector<Index>> roads_;
};

/// Every singleton must be a road and every pair must lie in some road.
/// Witnesses are [x] for a missing singleton and [x,y] for an uncovered pair.
Report validate_road_system(const RoadSystem& rs);

/// (a,b,c) iff b lies in every road containing a and c.
/// Throws invalid_road_system.
TernaryRelation relation_from_roads(const RoadSystem& rs);

/// The roads {[a,b] | a,b in X}. Throws not_r_relation.
RoadSystem intervals_as_roads(const TernaryRelation& rel);

}  // namespace btw
