#include "betweenness/relation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "betweenness/error.hpp"

namespace btw {

// ---------------------------------------------------------------- Carrier

Carrier::Carrier(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  const auto dup = std::adjacent_find(labels_.begin(), labels_.end());
  if (dup != labels_.end()) {
    throw Error(ErrorCode::duplicate_label, "label '" + *dup + "' occurs twice");
  }
}

std::optional<Index> Carrier::find(std::string_view label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Index Carrier::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::unknown_label, "'" + std::string(label) + "' is not in the carrier");
}

// -------------------------------------------------------- TernaryRelation

TernaryRelation::TernaryRelation(Carrier carrier)
    : carrier_(std::move(carrier)), bits_(carrier_.size() * carrier_.size() * carrier_.size()) {}

TernaryRelation::TernaryRelation(Carrier carrier, std::span<const LabelTriple> triples, bool mirror)
    : TernaryRelation(std::move(carrier)) {
  for (const auto& [a, b, c] : triples) {
    const Index ia = carrier_.index_of(a);
    const Index ib = carrier_.index_of(b);
    const Index ic = carrier_.index_of(c);
    insert(ia, ib, ic);
    if (mirror) insert(ic, ib, ia);
  }
}

bool TernaryRelation::contains(std::string_view a, std::string_view b, std::string_view c) const {
  return contains(carrier_.index_of(a), carrier_.index_of(b), carrier_.index_of(c));
}

std::vector<Triple> TernaryRelation::triples() const {
  std::vector<Triple> out;
  out.reserve(count());
  for_each_triple([&](const Triple& t) { out.push_back(t); });
  return out;
}

std::vector<LabelTriple> TernaryRelation::labelled_triples() const {
  std::vector<LabelTriple> out;
  out.reserve(count());
  for_each_triple([&](const Triple& t) {
    out.push_back({carrier_[t.a], carrier_[t.b], carrier_[t.c]});
  });
  return out;
}

Bits TernaryRelation::middles(Index a, Index c) const {
  const std::size_t n = order();
  Bits out(n);
  for (Index b = 0; b < n; ++b) {
    if (contains(a, b, c)) out.set(b);
  }
  return out;
}

void TernaryRelation::require_same_carrier(const TernaryRelation& other) const {
  if (carrier_ != other.carrier_) {
    throw Error(ErrorCode::carrier_mismatch, "relations live on different carriers");
  }
}

bool TernaryRelation::subset_of(const TernaryRelation& other) const {
  require_same_carrier(other);
  return bits_.is_subset_of(other.bits_);
}

TernaryRelation& TernaryRelation::operator|=(const TernaryRelation& other) {
  require_same_carrier(other);
  bits_ |= other.bits_;
  return *this;
}

TernaryRelation& TernaryRelation::operator&=(const TernaryRelation& other) {
  require_same_carrier(other);
  bits_ &= other.bits_;
  return *this;
}

// ------------------------------------------------------------ operations

TernaryRelation bottom_relation(const Carrier& carrier) {
  TernaryRelation rel(carrier);
  const std::size_t n = carrier.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      rel.insert(a, b, b);
      rel.insert(b, b, a);
    }
  }
  return rel;
}

TernaryRelation top_relation(const Carrier& carrier) {
  TernaryRelation rel(carrier);
  const std::size_t n = carrier.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (a == c && a != b) continue;
        rel.insert(a, b, c);
      }
    }
  }
  return rel;
}

std::vector<Label> interval(const TernaryRelation& rel, std::string_view a, std::string_view b) {
  const Carrier& x = rel.carrier();
  const Bits mid = rel.middles(x.index_of(a), x.index_of(b));
  std::vector<Label> out;
  for (auto i = mid.find_first(); i != Bits::npos; i = mid.find_next(i)) out.push_back(x[i]);
  return out;
}

TernaryRelation induced(const TernaryRelation& rel, std::span<const Index> points) {
  std::vector<Index> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Label> labels;
  labels.reserve(sorted.size());
  for (Index p : sorted) labels.push_back(rel.carrier()[p]);
  TernaryRelation out{Carrier(std::move(labels))};
  const std::size_t m = sorted.size();
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      for (Index k = 0; k < m; ++k) {
        if (rel.contains(sorted[i], sorted[j], sorted[k])) out.insert(i, j, k);
      }
    }
  }
  return out;
}

TernaryRelation image(const TernaryRelation& rel, std::span<const Index> assignment,
                      const Carrier& target) {
  TernaryRelation out(target);
  rel.for_each_triple([&](const Triple& t) {
    out.insert(assignment[t.a], assignment[t.b], assignment[t.c]);
  });
  return out;
}

const char* to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::r1: return "R1";
    case Axiom::r2: return "R2";
    case Axiom::r3: return "R3";
    case Axiom::r4: return "R4";
    case Axiom::antisymmetry: return "ANTISYM";
    case Axiom::disjunctivity: return "DISJ";
  }
  return "?";
}

Axiom parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::r1, Axiom::r2, Axiom::r3, Axiom::r4, Axiom::antisymmetry,
                  Axiom::disjunctivity}) {
    if (name == to_string(a)) return a;
  }
  throw Error(ErrorCode::invalid_input, "unknown axiom '" + std::string(name) + "'");
}

// ----------------------------------------------------------------- RelMap

RelMap::RelMap(TernaryRelation source, TernaryRelation target, std::vector<Index> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.order()) {
    throw Error(ErrorCode::invalid_map, "assignment is not total on the source carrier");
  }
  for (Index v : assignment_) {
    if (v >= target_.order()) {
      throw Error(ErrorCode::invalid_map, "assignment leaves the target carrier");
    }
  }
}

RelMap RelMap::identity(const TernaryRelation& rel) {
  std::vector<Index> id(rel.order());
  std::iota(id.begin(), id.end(), Index{0});
  return RelMap(rel, rel, std::move(id));
}

const Label& RelMap::operator()(std::string_view label) const {
  return target_.carrier()[assignment_[source_.carrier().index_of(label)]];
}

bool RelMap::is_identity() const {
  if (source_.carrier() != target_.carrier()) return false;
  for (Index i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] != i) return false;
  }
  return true;
}

RelMap compose(const RelMap& first, const RelMap& after) {
  if (!(first.target() == after.source())) {
    throw Error(ErrorCode::carrier_mismatch, "maps do not compose: endpoints differ");
  }
  std::vector<Index> assignment(first.assignment().size());
  for (Index i = 0; i < assignment.size(); ++i) assignment[i] = after(first(i));
  return RelMap(first.source(), after.target(), std::move(assignment));
}

Report is_monotone(const RelMap& f) {
  Report report;
  const Carrier& x = f.source().carrier();
  f.source().for_each_triple([&](const Triple& t) {
    if (!f.target().contains(f(t.a), f(t.b), f(t.c))) report.add({x[t.a], x[t.b], x[t.c]});
  });
  return report;
}

// -------------------------------------------------------------- Partition

Partition::Partition(Carrier carrier, std::span<const std::size_t> block_of)
    : carrier_(std::move(carrier)), block_of_(carrier_.size()) {
  if (block_of.size() != carrier_.size()) {
    throw Error(ErrorCode::invalid_partition, "block assignment does not cover the carrier");
  }
  // Renumber blocks in order of first appearance, i.e. by least element.
  std::map<std::size_t, std::size_t> renumber;
  for (Index i = 0; i < block_of.size(); ++i) {
    auto [it, fresh] = renumber.try_emplace(block_of[i], representatives_.size());
    if (fresh) representatives_.push_back(i);
    block_of_[i] = it->second;
  }
}

Partition Partition::discrete(Carrier carrier) {
  std::vector<std::size_t> ids(carrier.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return Partition(std::move(carrier), ids);
}

Partition Partition::from_blocks(Carrier carrier, const std::vector<std::vector<Label>>& blocks) {
  const std::size_t n = carrier.size();
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  std::vector<bool> seen(n, false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const Label& label : blocks[b]) {
      const Index i = carrier.index_of(label);
      if (seen[i]) {
        throw Error(ErrorCode::invalid_partition, "'" + label + "' appears in two blocks");
      }
      seen[i] = true;
      ids[i] = n + b;
    }
  }
  return Partition(std::move(carrier), ids);
}

std::vector<std::vector<Index>> Partition::blocks() const {
  std::vector<std::vector<Index>> out(block_count());
  for (Index i = 0; i < block_of_.size(); ++i) out[block_of_[i]].push_back(i);
  return out;
}

std::vector<std::vector<Label>> Partition::nontrivial_blocks() const {
  std::vector<std::vector<Label>> out;
  for (const auto& block : blocks()) {
    if (block.size() < 2) continue;
    std::vector<Label> labels;
    for (Index i : block) labels.push_back(carrier_[i]);
    out.push_back(std::move(labels));
  }
  return out;
}

Quotient quotient_relation(const TernaryRelation& rel, const Partition& part) {
  if (rel.carrier() != part.carrier()) {
    throw Error(ErrorCode::carrier_mismatch, "partition is over a different carrier");
  }
  std::vector<Label> labels;
  labels.reserve(part.block_count());
  for (std::size_t b = 0; b < part.block_count(); ++b) {
    labels.push_back(rel.carrier()[part.representative(b)]);
  }
  // Representatives are increasing in carrier order, so block ids coincide
  // with indices into the quotient carrier.
  TernaryRelation out{Carrier(std::move(labels))};
  std::vector<Index> assignment(rel.order());
  for (Index i = 0; i < rel.order(); ++i) assignment[i] = part.block_of(i);
  rel.for_each_triple([&](const Triple& t) {
    out.insert(assignment[t.a], assignment[t.b], assignment[t.c]);
  });
  return Quotient{out, RelMap(rel, out, std::move(assignment))};
}

}  // namespace btw
