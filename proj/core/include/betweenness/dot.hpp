#pragma once

#include <optional>
#include <string>
#include <utility>

#include "betweenness/orderlat.hpp"
#include "betweenness/relation.hpp"

namespace btw {

/// Hasse diagram, one edge per covering pair, drawn bottom to top.
std::string hasse_dot(const FinitePoset& poset);

/// Undirected graph with an edge a -- c whenever [a,c] has a point besides a
/// and c. With `pair`, the members of that interval are filled.
std::string interval_dot(const TernaryRelation& rel,
                         const std::optional<std::pair<Label, Label>>& pair = std::nullopt);

}  // namespace btw
