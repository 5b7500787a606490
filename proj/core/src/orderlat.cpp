#include "betweenness/orderlat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "betweenness/axioms.hpp"
#include "betweenness/error.hpp"

namespace btw {
namespace {

constexpr std::size_t flag_witness_limit = 8;
constexpr std::size_t max_subset_points = 12;
constexpr std::size_t max_convex_points = 16;

void add_capped(Report& report, Witness w) {
  report.holds = false;
  if (report.witnesses.size() < flag_witness_limit) report.witnesses.push_back(std::move(w));
}

Witness labels_of(const Carrier& x, std::initializer_list<Index> points) {
  Witness w;
  for (Index p : points) w.push_back(x[p]);
  return w;
}

Report from_axiom(const AxiomReport& axiom) {
  Report r;
  r.holds = axiom.holds;
  r.witnesses = axiom.witnesses;
  return r;
}

/// holds iff every component holds; witnesses of the first failing one.
Report conjunction(std::initializer_list<const Report*> parts) {
  for (const Report* part : parts) {
    if (!part->holds) return *part;
  }
  return Report{};
}

}  // namespace

// ------------------------------------------------------------ FinitePoset

FinitePoset::FinitePoset(Carrier carrier, std::vector<Bits> above)
    : carrier_(std::move(carrier)), above_(std::move(above)) {
  const std::size_t n = carrier_.size();
  if (above_.size() != n) throw Error(ErrorCode::invalid_poset, "order matrix has wrong size");
  for (const Bits& row : above_) {
    if (row.size() != n) throw Error(ErrorCode::invalid_poset, "order matrix has wrong size");
  }
  for (Index x = 0; x < n; ++x) {
    if (!leq(x, x)) throw Error(ErrorCode::invalid_poset, "not reflexive at " + carrier_[x]);
    for (Index y = 0; y < n; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) {
        throw Error(ErrorCode::invalid_poset,
                    "not antisymmetric: " + carrier_[x] + " and " + carrier_[y]);
      }
      if (leq(x, y) && !above_[y].is_subset_of(above_[x])) {
        throw Error(ErrorCode::invalid_poset, "not transitive through " + carrier_[y]);
      }
    }
  }
}

FinitePoset FinitePoset::from_pairs(Carrier carrier,
                                    const std::vector<std::pair<Label, Label>>& pairs) {
  const std::size_t n = carrier.size();
  std::vector<Bits> above(n, Bits(n));
  for (Index x = 0; x < n; ++x) above[x].set(x);
  for (const auto& [lo, hi] : pairs) above[carrier.index_of(lo)].set(carrier.index_of(hi));
  // Warshall closure on rows.
  for (Index k = 0; k < n; ++k) {
    for (Index x = 0; x < n; ++x) {
      if (above[x].test(k)) above[x] |= above[k];
    }
  }
  return FinitePoset(std::move(carrier), std::move(above));
}

Bits FinitePoset::below(Index x) const {
  Bits out(size());
  for (Index y = 0; y < size(); ++y) {
    if (leq(y, x)) out.set(y);
  }
  return out;
}

std::vector<std::pair<Index, Index>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < size(); ++x) {
    for (Index y = 0; y < size(); ++y) {
      if (x != y && leq(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<std::pair<Index, Index>> FinitePoset::covers() const {
  std::vector<std::pair<Index, Index>> out;
  for (const auto& [x, y] : strict_pairs()) {
    bool direct = true;
    for (Index z = 0; z < size() && direct; ++z) {
      if (z != x && z != y && leq(x, z) && leq(z, y)) direct = false;
    }
    if (direct) out.emplace_back(x, y);
  }
  return out;
}

// ---------------------------------------------------------- FiniteLattice

FiniteLattice::FiniteLattice(FinitePoset poset) : poset_(std::move(poset)) {
  const std::size_t n = size();
  if (n == 0) throw Error(ErrorCode::invalid_lattice, "a lattice needs at least one element");
  std::vector<Bits> below(n);
  for (Index x = 0; x < n; ++x) below[x] = poset_.below(x);
  const Carrier& labels = poset_.carrier();
  meet_.resize(n * n);
  join_.resize(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const Bits lower = below[x] & below[y];
      const Bits upper = poset_.above(x) & poset_.above(y);
      std::optional<Index> glb;
      std::optional<Index> lub;
      for (Index m = 0; m < n; ++m) {
        if (lower.test(m) && lower.is_subset_of(below[m])) glb = m;
        if (upper.test(m) && upper.is_subset_of(poset_.above(m))) lub = m;
      }
      if (!glb || !lub) {
        throw Error(ErrorCode::invalid_lattice,
                    std::string(glb ? "no join" : "no meet") + " for " + labels[x] + ", " + labels[y]);
      }
      meet_[x * n + y] = *glb;
      join_[x * n + y] = *lub;
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (Index x = 1; x < n; ++x) {
    bottom_ = meet(bottom_, x);
    top_ = join(top_, x);
  }
}

Index FiniteLattice::meet_all(std::span<const Index> xs) const {
  Index acc = top_;
  for (Index x : xs) acc = meet(acc, x);
  return acc;
}

Index FiniteLattice::join_all(std::span<const Index> xs) const {
  Index acc = bottom_;
  for (Index x : xs) acc = join(acc, x);
  return acc;
}

// ----------------------------------------------------- betweenness <-> order

TernaryRelation betweenness_from_lattice(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  TernaryRelation out(lattice.carrier());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index lo = lattice.meet(a, b);
      const Index hi = lattice.join(a, b);
      for (Index y = 0; y < n; ++y) {
        if (lattice.leq(lo, y) && lattice.leq(y, hi)) out.insert(a, y, b);
      }
    }
  }
  return out;
}

FinitePoset recover_order(const TernaryRelation& rel, std::string_view beta) {
  if (!is_r_relation(rel)) throw Error(ErrorCode::not_r_relation, "order recovery needs an R-relation");
  const Carrier& x = rel.carrier();
  const Index top = x.index_of(beta);
  const std::size_t n = x.size();
  std::vector<Bits> to_top(n);
  for (Index i = 0; i < n; ++i) to_top[i] = rel.middles(i, top);
  std::vector<Bits> above(n, Bits(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (to_top[j].is_subset_of(to_top[i])) above[i].set(j);
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (to_top[i] == to_top[j]) {
        throw Error(ErrorCode::order_recovery,
                    x[i] + " and " + x[j] + " have the same interval to " + std::string(beta));
      }
    }
  }
  return FinitePoset(x, std::move(above));
}

std::vector<BoundWitness> detect_bounds(const TernaryRelation& rel) {
  const Carrier& x = rel.carrier();
  const std::size_t n = x.size();
  std::vector<BoundWitness> out;
  for (Index alpha = 0; alpha < n; ++alpha) {
    for (Index beta = 0; beta < n; ++beta) {
      if (rel.middles(alpha, beta).count() != n) continue;
      std::vector<Bits> to_beta(n);
      for (Index i = 0; i < n; ++i) to_beta[i] = rel.middles(i, beta);
      std::sort(to_beta.begin(), to_beta.end());
      if (std::adjacent_find(to_beta.begin(), to_beta.end()) == to_beta.end()) {
        out.push_back({x[alpha], x[beta]});
      }
    }
  }
  return out;
}

// --------------------------------------------------------- classification

bool same_flags(const ClassificationReport& a, const ClassificationReport& b) {
  return a.linear.holds == b.linear.holds && a.bounded.holds == b.bounded.holds &&
         a.complete.holds == b.complete.holds && a.modular.holds == b.modular.holds &&
         a.distributive.holds == b.distributive.holds &&
         a.completely_distributive.holds == b.completely_distributive.holds &&
         a.boolean.holds == b.boolean.holds;
}

ClassificationReport classify_via_betweenness(const TernaryRelation& rel,
                                              const BoundWitness& witness) {
  const Carrier& x = rel.carrier();
  const std::size_t n = x.size();
  const auto alpha = x.find(witness.alpha);
  const auto beta = x.find(witness.beta);
  if (!alpha || !beta) throw Error(ErrorCode::invalid_witness, "witness labels not in carrier");
  if (n > max_subset_points) {
    throw Error(ErrorCode::carrier_too_large, "classification enumerates subsets; limit is 12");
  }
  std::vector<Bits> up(n);
  for (Index i = 0; i < n; ++i) up[i] = rel.middles(i, *beta);
  {
    if (rel.middles(*alpha, *beta).count() != n) {
      throw Error(ErrorCode::invalid_witness, "[alpha,beta] is not the whole carrier");
    }
    auto sorted = up;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::invalid_witness, "two points share their interval to beta");
    }
  }

  ClassificationReport report;
  // Every intersection of intervals to beta is itself such an interval.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Bits common(n);
    common.set();
    Witness subset;
    for (Index i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        common &= up[i];
        subset.push_back(x[i]);
      }
    }
    if (std::find(up.begin(), up.end(), common) == up.end()) add_capped(report.complete, subset);
  }

  report.linear = from_axiom(check_axiom(rel, Axiom::disjunctivity, flag_witness_limit));

  Report modular_law;
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      if (p == q || !up[p].is_subset_of(up[q])) continue;
      for (Index c = 0; c < n; ++c) {
        if (rel.middles(p, c) == rel.middles(q, c)) add_capped(modular_law, labels_of(x, {p, q, c}));
      }
    }
  }
  report.modular = conjunction({&report.complete, &modular_law});

  const Report antisymmetric = from_axiom(check_axiom(rel, Axiom::antisymmetry, flag_witness_limit));
  report.distributive = conjunction({&report.complete, &antisymmetric});
  report.completely_distributive = conjunction({&report.complete, &antisymmetric});

  Report complemented;
  for (Index p = 0; p < n; ++p) {
    bool found = false;
    for (Index q = 0; q < n && !found; ++q) found = rel.middles(p, q).count() == n;
    if (!found) add_capped(complemented, {x[p]});
  }
  report.boolean = conjunction({&report.distributive, &complemented});
  return report;
}

ClassificationReport classify_direct(const FiniteLattice& lattice) {
  const Carrier& x = lattice.carrier();
  const std::size_t n = lattice.size();
  ClassificationReport report;

  for (Index p = 0; p < n; ++p) {
    for (Index q = p + 1; q < n; ++q) {
      if (!lattice.poset().comparable(p, q)) add_capped(report.linear, labels_of(x, {p, q}));
    }
  }

  // Least upper bounds taken from the order matrix, not the join table.
  if (n <= max_subset_points) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Bits upper(n);
      upper.set();
      for (Index i = 0; i < n; ++i) {
        if (mask >> i & 1U) upper &= lattice.poset().above(i);
      }
      bool has_least = false;
      for (Index m = 0; m < n && !has_least; ++m) {
        has_least = upper.test(m) && upper.is_subset_of(lattice.poset().above(m));
      }
      if (!has_least) {
        Witness subset;
        for (Index i = 0; i < n; ++i) {
          if (mask >> i & 1U) subset.push_back(x[i]);
        }
        add_capped(report.complete, subset);
      }
    }
  }

  Report n5;
  Report m3;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        const bool a_below_b = a != b && lattice.leq(a, b);
        if (a_below_b && !lattice.poset().comparable(a, c) && !lattice.poset().comparable(b, c) &&
            lattice.meet(a, c) == lattice.meet(b, c) && lattice.join(a, c) == lattice.join(b, c)) {
          add_capped(n5, labels_of(x, {lattice.meet(a, c), a, b, c, lattice.join(a, c)}));
        }
        if (a < b && b < c && lattice.meet(a, b) == lattice.meet(a, c) &&
            lattice.meet(a, b) == lattice.meet(b, c) && lattice.join(a, b) == lattice.join(a, c) &&
            lattice.join(a, b) == lattice.join(b, c) && !lattice.poset().comparable(a, b) &&
            !lattice.poset().comparable(a, c) && !lattice.poset().comparable(b, c)) {
          add_capped(m3, labels_of(x, {lattice.meet(a, b), a, b, c, lattice.join(a, b)}));
        }
      }
    }
  }
  bool modular_law = true;
  bool distributive_law = true;
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      for (Index r = 0; r < n; ++r) {
        if (lattice.meet(p, lattice.join(q, r)) !=
            lattice.join(lattice.meet(p, q), lattice.meet(p, r))) {
          distributive_law = false;
        }
        if (lattice.leq(p, r) &&
            lattice.join(p, lattice.meet(q, r)) != lattice.meet(lattice.join(p, q), r)) {
          modular_law = false;
        }
      }
    }
  }
  if (modular_law != n5.holds || distributive_law != (n5.holds && m3.holds)) {
    throw Error(ErrorCode::internal, "sublattice search disagrees with the lattice laws");
  }
  report.modular = n5;
  report.distributive = conjunction({&n5, &m3});
  report.completely_distributive = conjunction({&report.complete, &report.distributive});

  Report complemented;
  for (Index p = 0; p < n; ++p) {
    bool found = false;
    for (Index q = 0; q < n && !found; ++q) {
      found = lattice.meet(p, q) == lattice.bottom() && lattice.join(p, q) == lattice.top();
    }
    if (!found) add_capped(complemented, {x[p]});
  }
  report.boolean = conjunction({&report.distributive, &complemented});
  return report;
}

// ------------------------------------------------------------- reflection

Reflection distributive_reflection(const FiniteLattice& lattice) {
  ClosureResult closed = antisymmetric_closure(betweenness_from_lattice(lattice));
  const Label& beta = closed.relation.carrier()[closed.quotient(lattice.top())];
  FinitePoset order = recover_order(closed.relation, beta);
  try {
    FiniteLattice reflected(std::move(order));
    return Reflection{std::move(reflected), closed.quotient.assignment(), std::move(closed.trace)};
  } catch (const Error& e) {
    throw Error(ErrorCode::order_recovery, std::string("recovered order is not a lattice: ") + e.what());
  }
}

// ------------------------------------------------------- Dedekind-MacNeille

Completion dm_completion(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  const Carrier& x = poset.carrier();
  std::vector<Bits> cuts;
  Bits everything(n);
  everything.set();
  cuts.push_back(everything);
  for (Index i = 0; i < n; ++i) cuts.push_back(poset.below(i));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  // Cuts are exactly the intersections of principal downsets (and X itself).
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Bits both = cuts[i] & cuts[j];
      if (std::find(cuts.begin(), cuts.end(), both) == cuts.end()) cuts.push_back(std::move(both));
    }
  }

  std::map<Bits, Label> principal;
  for (Index i = 0; i < n; ++i) principal.emplace(poset.below(i), x[i]);
  std::vector<std::pair<Label, Bits>> named;
  for (const Bits& cut : cuts) {
    if (auto it = principal.find(cut); it != principal.end()) {
      named.emplace_back(it->second, cut);
      continue;
    }
    std::string label = "{";
    for (auto i = cut.find_first(); i != Bits::npos; i = cut.find_next(i)) {
      label += (label.size() > 1 ? "," : "") + x[i];
    }
    named.emplace_back(label + "}", cut);
  }
  std::sort(named.begin(), named.end());

  std::vector<Label> labels;
  for (const auto& entry : named) labels.push_back(entry.first);
  const std::size_t m = named.size();
  std::vector<Bits> above(m, Bits(m));
  for (Index p = 0; p < m; ++p) {
    for (Index q = 0; q < m; ++q) {
      if (named[p].second.is_subset_of(named[q].second)) above[p].set(q);
    }
  }
  FiniteLattice lattice(FinitePoset(Carrier(labels), std::move(above)));
  std::vector<Index> embedding(n);
  for (Index i = 0; i < n; ++i) embedding[i] = lattice.carrier().index_of(x[i]);
  return Completion{std::move(lattice), std::move(embedding)};
}

RoadSystem convex_road_system(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  if (n > max_convex_points) {
    throw Error(ErrorCode::carrier_too_large, "convex subsets are enumerated; limit is 16 points");
  }
  std::vector<std::vector<Index>> roads;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    bool convex = true;
    for (Index lo = 0; lo < n && convex; ++lo) {
      if (!(mask >> lo & 1U)) continue;
      for (Index hi = 0; hi < n && convex; ++hi) {
        if (!(mask >> hi & 1U) || !poset.leq(lo, hi)) continue;
        for (Index mid = 0; mid < n && convex; ++mid) {
          if (poset.leq(lo, mid) && poset.leq(mid, hi) && !(mask >> mid & 1U)) convex = false;
        }
      }
    }
    if (!convex) continue;
    std::vector<Index> road;
    for (Index i = 0; i < n; ++i) {
      if (mask >> i & 1U) road.push_back(i);
    }
    roads.push_back(std::move(road));
  }
  return RoadSystem(poset.carrier(), std::move(roads));
}

Report dm_betweenness_report(const FinitePoset& poset) {
  const TernaryRelation convex = relation_from_roads(convex_road_system(poset));
  const Completion completion = dm_completion(poset);
  const FiniteLattice& lattice = completion.lattice;
  const auto& q = completion.embedding;
  const Carrier& x = poset.carrier();
  Report report;
  for (Index a = 0; a < poset.size(); ++a) {
    for (Index b = a + 1; b < poset.size(); ++b) {
      if (poset.comparable(a, b)) continue;
      const Index lo = lattice.meet(q[a], q[b]);
      const Index hi = lattice.join(q[a], q[b]);
      const Bits between = convex.middles(a, b);
      for (auto z = between.find_first(); z != Bits::npos; z = between.find_next(z)) {
        if (!lattice.leq(lo, q[z]) || !lattice.leq(q[z], hi)) report.add({x[a], x[b], x[z]});
      }
    }
  }
  return report;
}

}  // namespace btw
