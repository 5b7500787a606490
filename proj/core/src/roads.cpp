#include "betweenness/roads.hpp"

#include <algorithm>

#include "betweenness/axioms.hpp"
#include "betweenness/error.hpp"

namespace btw {

RoadSystem::RoadSystem(Carrier carrier, const std::vector<std::vector<Label>>& roads)
    : carrier_(std::move(carrier)) {
  roads_.reserve(roads.size());
  for (const auto& road : roads) {
    std::vector<Index> members;
    members.reserve(road.size());
    for (const Label& label : road) members.push_back(carrier_.index_of(label));
    roads_.push_back(std::move(members));
  }
  normalise();
}

RoadSystem::RoadSystem(Carrier carrier, std::vector<std::vector<Index>> roads)
    : carrier_(std::move(carrier)), roads_(std::move(roads)) {
  for (const auto& road : roads_) {
    for (Index i : road) {
      if (i >= carrier_.size()) throw Error(ErrorCode::unknown_label, "road member out of range");
    }
  }
  normalise();
}

void RoadSystem::normalise() {
  for (auto& road : roads_) {
    std::sort(road.begin(), road.end());
    road.erase(std::unique(road.begin(), road.end()), road.end());
  }
  std::sort(roads_.begin(), roads_.end());
  roads_.erase(std::unique(roads_.begin(), roads_.end()), roads_.end());
}

std::vector<std::vector<Label>> RoadSystem::labelled_roads() const {
  std::vector<std::vector<Label>> out;
  out.reserve(roads_.size());
  for (const auto& road : roads_) {
    std::vector<Label> labels;
    for (Index i : road) labels.push_back(carrier_[i]);
    out.push_back(std::move(labels));
  }
  return out;
}

namespace {

std::vector<Bits> as_bits(const RoadSystem& rs) {
  const std::size_t n = rs.carrier().size();
  std::vector<Bits> out;
  out.reserve(rs.roads().size());
  for (const auto& road : rs.roads()) {
    Bits b(n);
    for (Index i : road) b.set(i);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

Report validate_road_system(const RoadSystem& rs) {
  Report report;
  const Carrier& x = rs.carrier();
  const std::size_t n = x.size();
  std::vector<bool> singleton(n, false);
  for (const auto& road : rs.roads()) {
    if (road.size() == 1) singleton[road.front()] = true;
  }
  for (Index i = 0; i < n; ++i) {
    if (!singleton[i]) report.add({x[i]});
  }
  const auto roads = as_bits(rs);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const bool covered = std::any_of(roads.begin(), roads.end(),
                                        [&](const Bits& r) { return r.test(i) && r.test(j); });
      if (!covered) report.add({x[i], x[j]});
    }
  }
  return report;
}

TernaryRelation relation_from_roads(const RoadSystem& rs) {
  const Report valid = validate_road_system(rs);
  if (!valid.holds) {
    std::string first;
    for (const auto& label : valid.witnesses.front()) first += (first.empty() ? "" : ",") + label;
    throw Error(ErrorCode::invalid_road_system, "violation at {" + first + "}");
  }
  const std::size_t n = rs.carrier().size();
  const auto roads = as_bits(rs);
  TernaryRelation out(rs.carrier());
  for (Index a = 0; a < n; ++a) {
    for (Index c = 0; c < n; ++c) {
      Bits between(n);
      between.set();
      for (const Bits& r : roads) {
        if (r.test(a) && r.test(c)) between &= r;
      }
      for (auto b = between.find_first(); b != Bits::npos; b = between.find_next(b)) {
        out.insert(a, b, c);
      }
    }
  }
  return out;
}

RoadSystem intervals_as_roads(const TernaryRelation& rel) {
  if (!is_r_relation(rel)) {
    throw Error(ErrorCode::not_r_relation, "intervals only form a road system for R-relations");
  }
  const std::size_t n = rel.order();
  std::vector<std::vector<Index>> roads;
  roads.reserve(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Bits mid = rel.middles(a, b);
      std::vector<Index> members;
      for (auto i = mid.find_first(); i != Bits::npos; i = mid.find_next(i)) members.push_back(i);
      roads.push_back(std::move(members));
    }
  }
  return RoadSystem(rel.carrier(), std::move(roads));
}

}  // namespace btw
