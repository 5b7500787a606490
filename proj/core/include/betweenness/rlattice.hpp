#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "betweenness/relation.hpp"

namespace btw {

/// Intersection of R-relations on one carrier. Throws invalid_input for an
/// empty list, carrier_mismatch, or not_r_relation.
TernaryRelation meet(std::span<const TernaryRelation> rels);

/// r_closure of the union. The carrier never changes: an internal error is
/// raised if the minimality stage would glue points.
TernaryRelation join(std::span<const TernaryRelation> rels);

/// The largest R-relation on `domain` making the assignment monotone into
/// `rel`: the preimage of rel minus the triples (a,b,a) with a != b.
/// Throws not_r_relation or invalid_map.
TernaryRelation pullback(const Carrier& domain, std::span<const Index> assignment,
                         const TernaryRelation& rel);

struct Leg {
  std::vector<Index> assignment;  ///< apex index -> target index
  TernaryRelation target;
};

struct Cone {
  Carrier apex;
  std::vector<Leg> legs;
};

/// Meet of the pullbacks along every leg; top_relation(apex) for no legs.
TernaryRelation initial_lift(const Cone& cone);

enum class RelationFilter {
  all_r,            ///< every R-relation
  antisymmetric_r,  ///< antisymmetric R-relations
  without_r4,       ///< relations between bottom and top (R1-R3), R4 not required
};

const char* to_string(RelationFilter filter) noexcept;
/// ALL_R, ANTISYM_R or R3_ONLY. Throws invalid_input.
RelationFilter parse_filter(std::string_view name);

inline constexpr std::size_t default_max_carrier = 4;

/// Every relation between bottom and top on `carrier` passing the filter.
/// Candidates are unions of mirror orbits, so the search is 2^(n(n-1)(n-2)/2).
/// Throws carrier_too_large above `max_carrier`.
std::vector<TernaryRelation> enumerate_relations(const Carrier& carrier, RelationFilter filter,
                                                 std::size_t max_carrier = default_max_carrier);

}  // namespace btw
