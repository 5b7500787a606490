#include "betweenness/json_io.hpp"

#include <algorithm>

#include "betweenness/error.hpp"

namespace btw::json_io {
namespace {

Carrier carrier_from(const json& elements) {
  return Carrier(elements.get<std::vector<Label>>());
}

json labels_json(const Carrier& c) { return json(c.labels()); }

json witnesses_json(const std::vector<Witness>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w);
  return out;
}

}  // namespace

TernaryRelation relation_from_json(const json& j) {
  const Carrier carrier = carrier_from(j.at("elements"));
  const bool mirror = j.value("r2_closure", true);
  std::vector<LabelTriple> triples;
  for (const auto& t : j.at("triples")) {
    if (!t.is_array() || t.size() != 3) {
      throw Error(ErrorCode::invalid_input, "a triple must list exactly three labels");
    }
    triples.push_back({t[0].get<Label>(), t[1].get<Label>(), t[2].get<Label>()});
  }
  TernaryRelation rel(carrier, triples, mirror);
  if (j.value("include_bottom", false)) rel |= bottom_relation(carrier);
  return rel;
}

json to_json(const TernaryRelation& rel) {
  json triples = json::array();
  for (const auto& t : rel.labelled_triples()) triples.push_back(t);
  return json{{"elements", labels_json(rel.carrier())}, {"triples", triples}, {"r2_closure", false}};
}

json to_json(const Report& report) {
  return json{{"holds", report.holds}, {"witnesses", witnesses_json(report.witnesses)}};
}

json to_json(const AxiomReport& report) {
  return json{{"axiom", to_string(report.axiom)},
              {"holds", report.holds},
              {"witnesses", witnesses_json(report.witnesses)}};
}

json to_json(const TraceStep& step) {
  return json{{"step", step.step},
              {"carrier", step.carrier},
              {"triples", step.triples},
              {"changed", step.changed}};
}

json to_json(const ClosureResult& result) {
  json trace = json::array();
  for (const auto& step : result.trace) trace.push_back(to_json(step));
  return json{{"relation", to_json(result.relation)},
              {"quotient",
               map_json(result.quotient.source().carrier(), result.quotient.target().carrier(),
                        result.quotient.assignment())},
              {"trace", trace}};
}

json to_json(const Partition& part) {
  json blocks = json::array();
  for (const auto& block : part.blocks()) {
    json labels = json::array();
    for (Index i : block) labels.push_back(part.carrier()[i]);
    blocks.push_back(labels);
  }
  return json{{"elements", labels_json(part.carrier())}, {"blocks", blocks}};
}

RoadSystem roads_from_json(const json& j) {
  return RoadSystem(carrier_from(j.at("elements")),
                    j.at("roads").get<std::vector<std::vector<Label>>>());
}

json to_json(const RoadSystem& rs) {
  return json{{"elements", labels_json(rs.carrier())}, {"roads", rs.labelled_roads()}};
}

FinitePoset poset_from_json(const json& j) {
  std::vector<std::pair<Label, Label>> pairs;
  for (const auto& p : j.at("leq")) {
    if (!p.is_array() || p.size() != 2) {
      throw Error(ErrorCode::invalid_input, "an order pair must list exactly two labels");
    }
    pairs.emplace_back(p[0].get<Label>(), p[1].get<Label>());
  }
  return FinitePoset::from_pairs(carrier_from(j.at("elements")), pairs);
}

FiniteLattice lattice_from_json(const json& j) { return FiniteLattice(poset_from_json(j)); }

json to_json(const FinitePoset& poset) {
  json leq = json::array();
  for (const auto& [x, y] : poset.covers()) leq.push_back({poset.carrier()[x], poset.carrier()[y]});
  return json{{"elements", labels_json(poset.carrier())}, {"leq", leq}};
}

json to_json(const FiniteLattice& lattice) {
  json out = to_json(lattice.poset());
  out["bottom"] = lattice.carrier()[lattice.bottom()];
  out["top"] = lattice.carrier()[lattice.top()];
  return out;
}

json map_json(const Carrier& source, const Carrier& target, std::span<const Index> assignment) {
  json map = json::object();
  for (Index i = 0; i < source.size(); ++i) map[source[i]] = target[assignment[i]];
  return json{{"map", map}};
}

std::vector<Index> assignment_from_json(const json& j, const Carrier& source, const Carrier& target) {
  const json& map = j.contains("map") ? j.at("map") : j;
  std::vector<Index> out(source.size());
  for (Index i = 0; i < source.size(); ++i) {
    if (!map.contains(source[i])) {
      throw Error(ErrorCode::invalid_map, "map has no value for '" + source[i] + "'");
    }
    out[i] = target.index_of(map.at(source[i]).get<Label>());
  }
  if (map.size() != source.size()) {
    throw Error(ErrorCode::invalid_map, "map mentions labels outside its domain");
  }
  return out;
}

Cone cone_from_json(const json& j) {
  Cone cone{carrier_from(j.at("apex")), {}};
  for (const auto& leg : j.at("legs")) {
    TernaryRelation target = relation_from_json(leg.at("target"));
    std::vector<Index> assignment = assignment_from_json(leg, cone.apex, target.carrier());
    cone.legs.push_back(Leg{std::move(assignment), std::move(target)});
  }
  return cone;
}

json to_json(const BoundWitness& w) { return json{{"alpha", w.alpha}, {"beta", w.beta}}; }

json to_json(const ClassificationReport& report) {
  return json{{"linear", to_json(report.linear)},
              {"bounded", to_json(report.bounded)},
              {"complete", to_json(report.complete)},
              {"modular", to_json(report.modular)},
              {"distributive", to_json(report.distributive)},
              {"completely_distributive", to_json(report.completely_distributive)},
              {"boolean", to_json(report.boolean)}};
}

json to_json(const Reflection& reflection, const Carrier& input) {
  json trace = json::array();
  for (const auto& step : reflection.trace) trace.push_back(to_json(step));
  json out = map_json(input, reflection.lattice.carrier(), reflection.map);
  out["lattice"] = to_json(reflection.lattice);
  out["trace"] = trace;
  return out;
}

json to_json(const Completion& completion) {
  json embedding = json::array();
  for (Index i : completion.embedding) embedding.push_back(completion.lattice.carrier()[i]);
  return json{{"lattice", to_json(completion.lattice)}, {"embedding", embedding}};
}

json to_json(const StrongEmbedding& e) { return map_json(e.source, e.target, e.assignment); }

json to_json(const Joint& joint) {
  return json{{"result", to_json(joint.result)}, {"e1", to_json(joint.e1)}, {"e2", to_json(joint.e2)}};
}

json to_json(const Amalgam& amalgam) {
  return json{{"result", to_json(amalgam.result)},
              {"g1", to_json(amalgam.g1)},
              {"g2", to_json(amalgam.g2)},
              {"closure_applied", amalgam.closure_applied}};
}

json to_json(const ExtensionRequest& request) {
  return json{{"base", request.base},
              {"fresh", request.fresh},
              {"extension", to_json(request.extension)},
              {"canonical", to_json(canonical_form(request.extension))}};
}

json to_json(const AuditReport& report) {
  json unmet = json::array();
  for (const auto& r : report.unmet) unmet.push_back(to_json(r));
  return json{{"k", report.k},
              {"requests", report.requests},
              {"holds", report.holds()},
              {"unmet", unmet}};
}

json to_json(const ChainReport& report) {
  json stages = json::array();
  for (const auto& s : report.stages) stages.push_back(to_json(s));
  json links = json::array();
  for (const auto& l : report.links) links.push_back(to_json(l));
  json satisfied = json::array();
  for (const auto& s : report.satisfied) {
    satisfied.push_back(json{{"round", s.round},
                             {"base", s.request.base},
                             {"extension", to_json(s.request.extension)},
                             {"fresh", s.request.fresh},
                             {"witness", s.witness},
                             {"added", s.added}});
  }
  json pending = json::array();
  for (const auto& p : report.pending) {
    pending.push_back(json{{"base", p.base}, {"fresh", p.fresh}, {"extension", to_json(p.extension)}});
  }
  return json{{"size_bound", report.size_bound},
              {"rounds", report.rounds},
              {"seed", report.seed},
              {"stages", stages},
              {"links", links},
              {"satisfied", satisfied},
              {"pending", pending}};
}

json to_json(const HomogeneityReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(json{{"from", f.from}, {"to", f.to}, {"point", f.point}});
  }
  return json{{"k", report.k},
              {"holds", report.holds()},
              {"isomorphisms", report.isomorphisms},
              {"failure_count", report.failure_count},
              {"failures", failures}};
}

}  // namespace btw::json_io
