#include "betweenness/fixtures.hpp"

namespace btw::fixtures {
namespace {

TernaryRelation with_bottom(std::vector<Label> labels, const std::vector<LabelTriple>& triples) {
  const Carrier carrier(std::move(labels));
  TernaryRelation rel(carrier, triples, true);
  rel |= bottom_relation(carrier);
  return rel;
}

FiniteLattice lattice(std::vector<Label> labels, const std::vector<std::pair<Label, Label>>& leq) {
  return FiniteLattice(FinitePoset::from_pairs(Carrier(std::move(labels)), leq));
}

}  // namespace

TernaryRelation tri() { return with_bottom({"a", "b", "c"}, {{"a", "b", "c"}, {"a", "c", "b"}}); }

TernaryRelation ex7() {
  return with_bottom({"a", "b", "c", "x", "d1", "d2", "y"},
                     {{"a", "b", "c"},
                      {"a", "d1", "c"},
                      {"b", "x", "d2"},
                      {"y", "d1", "d2"},
                      {"y", "d2", "d1"},
                      {"a", "c", "x"}});
}

TernaryRelation relation_1() {
  return with_bottom({"a", "b", "c", "x", "d1", "y"},
                     {{"a", "b", "c"}, {"a", "d1", "c"}, {"b", "x", "d1"}, {"a", "c", "x"}});
}

TernaryRelation ex7_extended() {
  return with_bottom({"a", "b", "c", "x", "d1", "d2", "y", "a'", "b'", "c'", "x'", "d1'", "d2'"},
                     {{"a", "b", "c"},
                      {"a", "d1", "c"},
                      {"b", "x", "d2"},
                      {"y", "d1", "d2"},
                      {"y", "d2", "d1"},
                      {"a", "c", "x"},
                      {"a'", "b'", "c'"},
                      {"a'", "d1'", "c'"},
                      {"b'", "x'", "d2'"},
                      {"a'", "c'", "x'"},
                      {"x", "d1'", "d2'"},
                      {"c", "d2'", "d1'"}});
}

FiniteLattice c3() { return lattice({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}); }

FiniteLattice b4() {
  return lattice({"0", "p", "q", "1"}, {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}});
}

FiniteLattice n5() {
  return lattice({"0", "a", "b", "c", "1"},
                 {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

FiniteLattice m3() {
  return lattice({"0", "x", "y", "z", "1"},
                 {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
}

}  // namespace btw::fixtures
