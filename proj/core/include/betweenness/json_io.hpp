#pragma once

#include <nlohmann/json.hpp>

#include "betweenness/closures.hpp"
#include "betweenness/fraisse.hpp"
#include "betweenness/orderlat.hpp"
#include "betweenness/relation.hpp"
#include "betweenness/rlattice.hpp"
#include "betweenness/roads.hpp"

namespace btw::json_io {

using nlohmann::json;

/// {"elements":[...], "triples":[[a,b,c],...], "r2_closure":bool, "include_bottom":bool}.
/// r2_closure defaults to true, include_bottom to false. Structural problems
/// raise nlohmann exceptions; unknown labels raise btw::Error.
TernaryRelation relation_from_json(const json& j);
/// Sorted elements and triples, every triple listed, r2_closure false.
json to_json(const TernaryRelation& rel);

json to_json(const Report& report);
json to_json(const AxiomReport& report);
json to_json(const TraceStep& step);
/// {"relation", "quotient":{"map":{label:label}}, "trace":[...]}.
json to_json(const ClosureResult& result);
json to_json(const Partition& part);

RoadSystem roads_from_json(const json& j);
json to_json(const RoadSystem& rs);

/// {"elements":[...], "leq":[[x,y],...]}; reflexive and transitive pairs
/// may be omitted.
FinitePoset poset_from_json(const json& j);
FiniteLattice lattice_from_json(const json& j);
/// Covering pairs only.
json to_json(const FinitePoset& poset);
json to_json(const FiniteLattice& lattice);

/// {"map":{source:target,...}} keyed by source labels.
json map_json(const Carrier& source, const Carrier& target, std::span<const Index> assignment);
/// Reads a {"map":{...}} object (or a bare object) into an assignment.
std::vector<Index> assignment_from_json(const json& j, const Carrier& source, const Carrier& target);

/// {"apex":[...], "legs":[{"map":{...}, "target":relation}, ...]}.
Cone cone_from_json(const json& j);

json to_json(const BoundWitness& w);
json to_json(const ClassificationReport& report);
/// The map is keyed by the labels of the reflected lattice.
json to_json(const Reflection& reflection, const Carrier& input);
json to_json(const Completion& completion);

json to_json(const StrongEmbedding& e);
json to_json(const Joint& joint);
json to_json(const Amalgam& amalgam);
json to_json(const ExtensionRequest& request);
json to_json(const AuditReport& report);
json to_json(const ChainReport& report);
json to_json(const HomogeneityReport& report);

}  // namespace btw::json_io
