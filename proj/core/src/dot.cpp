#include "betweenness/dot.hpp"

#include <sstream>

namespace btw {
namespace {

std::string quoted(const Label& label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const FinitePoset& poset) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const Label& l : poset.carrier()) out << "  " << quoted(l) << ";\n";
  for (const auto& [lo, hi] : poset.covers()) {
    out << "  " << quoted(poset.carrier()[lo]) << " -> " << quoted(poset.carrier()[hi])
        << " [arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

std::string interval_dot(const TernaryRelation& rel,
                         const std::optional<std::pair<Label, Label>>& pair) {
  const Carrier& x = rel.carrier();
  const std::size_t n = x.size();
  Bits highlight(n);
  if (pair) highlight = rel.middles(x.index_of(pair->first), x.index_of(pair->second));
  std::ostringstream out;
  out << "graph intervals {\n  node [shape=circle];\n";
  for (Index i = 0; i < n; ++i) {
    out << "  " << quoted(x[i]);
    if (highlight.test(i)) out << " [style=filled, fillcolor=lightblue]";
    out << ";\n";
  }
  for (Index a = 0; a < n; ++a) {
    for (Index c = a + 1; c < n; ++c) {
      Bits mid = rel.middles(a, c);
      mid.reset(a);
      mid.reset(c);
      if (mid.none()) continue;
      out << "  " << quoted(x[a]) << " -- " << quoted(x[c]) << " [label=\"";
      bool first = true;
      for (auto m = mid.find_first(); m != Bits::npos; m = mid.find_next(m)) {
        out << (first ? "" : ",") << x[m];
        first = false;
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace btw
