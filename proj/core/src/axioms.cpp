#include "betweenness/axioms.hpp"

namespace btw {
namespace {

class Sweep {
 public:
  Sweep(const TernaryRelation& rel, Axiom axiom, std::size_t limit)
      : rel_(rel), x_(rel.carrier()), limit_(limit) {
    report_.axiom = axiom;
  }

  bool full() const { return report_.witnesses.size() >= limit_; }

  void add(std::initializer_list<Index> points) {
    Witness w;
    for (Index p : points) w.push_back(x_[p]);
    report_.holds = false;
    report_.witnesses.push_back(std::move(w));
  }

  AxiomReport finish() && { return std::move(report_); }

  const TernaryRelation& rel() const { return rel_; }

 private:
  const TernaryRelation& rel_;
  const Carrier& x_;
  std::size_t limit_;
  AxiomReport report_;
};

void sweep_r1(Sweep& s, std::size_t n) {
  for (Index a = 0; a < n && !s.full(); ++a) {
    for (Index b = 0; b < n && !s.full(); ++b) {
      if (!s.rel().contains(a, b, b)) s.add({a, b, b});
    }
  }
}

void sweep_r2(Sweep& s) {
  s.rel().for_each_triple([&](const Triple& t) {
    if (!s.full() && !s.rel().contains(t.c, t.b, t.a)) s.add({t.a, t.b, t.c});
  });
}

void sweep_r3(Sweep& s) {
  s.rel().for_each_triple([&](const Triple& t) {
    if (!s.full() && t.a == t.c && t.a != t.b) s.add({t.a, t.b, t.c});
  });
}

void sweep_r4(Sweep& s, std::size_t n) {
  for (Index a = 0; a < n; ++a) {
    for (Index c = 0; c < n; ++c) {
      const Bits ac = s.rel().middles(a, c);
      for (auto b = ac.find_first(); b != Bits::npos; b = ac.find_next(b)) {
        for (auto d = ac.find_first(); d != Bits::npos; d = ac.find_next(d)) {
          const Bits escaped = s.rel().middles(b, d) - ac;
          for (auto x = escaped.find_first(); x != Bits::npos; x = escaped.find_next(x)) {
            if (s.full()) return;
            s.add({a, x, c, b, d});
          }
        }
      }
    }
  }
}

void sweep_antisymmetry(Sweep& s) {
  s.rel().for_each_triple([&](const Triple& t) {
    if (!s.full() && t.b < t.c && s.rel().contains(t.a, t.c, t.b)) s.add({t.a, t.b, t.c});
  });
}

void sweep_disjunctivity(Sweep& s, std::size_t n) {
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Bits ab = s.rel().middles(a, b);
      for (auto x = ab.find_first(); x != Bits::npos; x = ab.find_next(x)) {
        for (Index c = 0; c < n; ++c) {
          if (s.full()) return;
          if (!s.rel().contains(a, x, c) && !s.rel().contains(c, x, b)) s.add({a, b, c, x});
        }
      }
    }
  }
}

}  // namespace

AxiomReport check_axiom(const TernaryRelation& rel, Axiom axiom, std::size_t max_witnesses) {
  Sweep sweep(rel, axiom, max_witnesses);
  const std::size_t n = rel.order();
  switch (axiom) {
    case Axiom::r1: sweep_r1(sweep, n); break;
    case Axiom::r2: sweep_r2(sweep); break;
    case Axiom::r3: sweep_r3(sweep); break;
    case Axiom::r4: sweep_r4(sweep, n); break;
    case Axiom::antisymmetry: sweep_antisymmetry(sweep); break;
    case Axiom::disjunctivity: sweep_disjunctivity(sweep, n); break;
  }
  return std::move(sweep).finish();
}

bool satisfies(const TernaryRelation& rel, Axiom axiom) {
  return check_axiom(rel, axiom, 1).holds;
}

bool is_r_relation(const TernaryRelation& rel) {
  return satisfies(rel, Axiom::r1) && satisfies(rel, Axiom::r2) && satisfies(rel, Axiom::r3) &&
         satisfies(rel, Axiom::r4);
}

}  // namespace btw
