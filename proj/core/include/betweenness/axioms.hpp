#pragma once

#include <cstddef>
#include <limits>

#include "betweenness/relation.hpp"

namespace btw {

inline constexpr std::size_t all_witnesses = std::numeric_limits<std::size_t>::max();

/// Decides one axiom by an exhaustive quantifier sweep. Witness shapes:
///   R1       [a,b,b]           the missing reflexive triple
///   R2       [a,b,c]           present, while (c,b,a) is absent
///   R3       [a,b,a]           present with a != b
///   R4       [a,x,c,b,d]       (a,b,c),(a,d,c),(b,x,d) present, (a,x,c) absent
///   ANTISYM  [a,b,c]           (a,b,c) and (a,c,b) present with b < c
///   DISJ     [a,b,c,x]         x in [a,b] but neither (a,x,c) nor (c,x,b)
/// The sweep stops after `max_witnesses` violations.
AxiomReport check_axiom(const TernaryRelation& rel, Axiom axiom,
                        std::size_t max_witnesses = all_witnesses);

bool satisfies(const TernaryRelation& rel, Axiom axiom);

/// R1 through R4. Disjunctivity and antisymmetry are not part of it.
bool is_r_relation(const TernaryRelation& rel);

}  // namespace btw
