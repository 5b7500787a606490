#include "betweenness/rlattice.hpp"

#include "betweenness/axioms.hpp"
#include "betweenness/closures.hpp"
#include "betweenness/error.hpp"

namespace btw {
namespace {

void require_r_family(std::span<const TernaryRelation> rels, const char* what) {
  if (rels.empty()) throw Error(ErrorCode::invalid_input, std::string(what) + " of an empty list");
  for (const auto& rel : rels) {
    if (rel.carrier() != rels.front().carrier()) {
      throw Error(ErrorCode::carrier_mismatch, std::string(what) + " across different carriers");
    }
    if (!is_r_relation(rel)) {
      throw Error(ErrorCode::not_r_relation, std::string(what) + " expects R-relations");
    }
  }
}

}  // namespace

TernaryRelation meet(std::span<const TernaryRelation> rels) {
  require_r_family(rels, "meet");
  TernaryRelation out = rels.front();
  for (const auto& rel : rels.subspan(1)) out &= rel;
  return out;
}

TernaryRelation join(std::span<const TernaryRelation> rels) {
  require_r_family(rels, "join");
  TernaryRelation un = rels.front();
  for (const auto& rel : rels.subspan(1)) un |= rel;
  ClosureResult closed = r_closure(un);
  if (!closed.quotient.is_identity()) {
    throw Error(ErrorCode::internal, "union of R-relations was glued by the minimality stage");
  }
  return std::move(closed.relation);
}

TernaryRelation pullback(const Carrier& domain, std::span<const Index> assignment,
                         const TernaryRelation& rel) {
  if (!is_r_relation(rel)) throw Error(ErrorCode::not_r_relation, "pullback of a non-R-relation");
  if (assignment.size() != domain.size()) {
    throw Error(ErrorCode::invalid_map, "assignment is not total on the domain");
  }
  for (Index v : assignment) {
    if (v >= rel.order()) throw Error(ErrorCode::invalid_map, "assignment leaves the codomain");
  }
  const std::size_t n = domain.size();
  TernaryRelation out(domain);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (a == c && a != b) continue;
        if (rel.contains(assignment[a], assignment[b], assignment[c])) out.insert(a, b, c);
      }
    }
  }
  return out;
}

TernaryRelation initial_lift(const Cone& cone) {
  TernaryRelation out = top_relation(cone.apex);
  for (const Leg& leg : cone.legs) out &= pullback(cone.apex, leg.assignment, leg.target);
  return out;
}

const char* to_string(RelationFilter filter) noexcept {
  switch (filter) {
    case RelationFilter::all_r: return "ALL_R";
    case RelationFilter::antisymmetric_r: return "ANTISYM_R";
    case RelationFilter::without_r4: return "R3_ONLY";
  }
  return "?";
}

RelationFilter parse_filter(std::string_view name) {
  for (auto f : {RelationFilter::all_r, RelationFilter::antisymmetric_r, RelationFilter::without_r4}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::invalid_input, "unknown filter '" + std::string(name) + "'");
}

std::vector<TernaryRelation> enumerate_relations(const Carrier& carrier, RelationFilter filter,
                                                 std::size_t max_carrier) {
  const std::size_t n = carrier.size();
  if (n > max_carrier) {
    throw Error(ErrorCode::carrier_too_large, "enumeration is limited to " +
                                                  std::to_string(max_carrier) + " points, got " +
                                                  std::to_string(n));
  }
  // Top minus bottom consists of the triples with three distinct points;
  // each mirror orbit {(a,b,c),(c,b,a)} is represented with a < c.
  std::vector<Triple> orbits;
  for (Index a = 0; a < n; ++a) {
    for (Index c = a + 1; c < n; ++c) {
      for (Index b = 0; b < n; ++b) {
        if (b != a && b != c) orbits.push_back({a, b, c});
      }
    }
  }
  const TernaryRelation base = bottom_relation(carrier);
  const std::size_t total = std::size_t{1} << orbits.size();
  std::vector<TernaryRelation> out;
  for (std::size_t mask = 0; mask < total; ++mask) {
    TernaryRelation candidate = base;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      if (mask >> k & 1U) candidate.insert_mirrored(orbits[k].a, orbits[k].b, orbits[k].c);
    }
    if (filter != RelationFilter::without_r4 && !satisfies(candidate, Axiom::r4)) continue;
    if (filter == RelationFilter::antisymmetric_r && !satisfies(candidate, Axiom::antisymmetry)) {
      continue;
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace btw
