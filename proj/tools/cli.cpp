#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "betweenness/axioms.hpp"
#include "betweenness/closures.hpp"
#include "betweenness/dot.hpp"
#include "betweenness/error.hpp"
#include "betweenness/fraisse.hpp"
#include "betweenness/json_io.hpp"
#include "betweenness/orderlat.hpp"
#include "betweenness/rlattice.hpp"
#include "betweenness/roads.hpp"

namespace btw::cli {
namespace {

using nlohmann::json;
using namespace btw::json_io;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string in2;
  std::string over;
  std::string out;
  std::string op;
  std::string axiom;
  std::string filter = "ALL_R";
  std::string beta;
  std::string pair;
  std::uint64_t seed = 0;
  std::size_t size_bound = 3;
  std::size_t rounds = 2;
  std::size_t k = 2;
};

/// Either a JSON document or raw text (DOT).
struct Output {
  json doc;
  std::string text;
  std::string summary;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return json::parse(in);
}

std::size_t max_carrier() {
  if (const char* env = std::getenv("BETWEENNESS_MAX_CARRIER")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw UsageError("BETWEENNESS_MAX_CARRIER must be a number");
    }
  }
  return default_max_carrier;
}

std::string count_summary(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what;
}

ClosureResult same_carrier_step(const TernaryRelation& in, TernaryRelation out, const char* name) {
  const bool changed = out != in;
  std::vector<Index> id(in.order());
  std::iota(id.begin(), id.end(), Index{0});
  TraceStep step{name, out.order(), out.count(), changed};
  RelMap map(in, out, std::move(id));
  return ClosureResult{std::move(out), std::move(map), {step}};
}

Output do_validate(const Options& o) {
  const json j = read_json(o.in);
  if (j.contains("roads")) {
    const RoadSystem rs = roads_from_json(j);
    const Report r = validate_road_system(rs);
    json doc = to_json(r);
    if (r.holds) doc["relation"] = to_json(relation_from_roads(rs));
    return {doc, {}, r.holds ? "valid road system" : "invalid road system"};
  }
  if (j.contains("leq")) {
    const FinitePoset poset = poset_from_json(j);
    json doc{{"poset", true}, {"lattice", true}};
    try {
      FiniteLattice lattice(poset);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::invalid_lattice) throw;
      doc["lattice"] = false;
      doc["reason"] = e.what();
    }
    return {doc, {}, doc["lattice"].get<bool>() ? "lattice" : "poset, not a lattice"};
  }
  const TernaryRelation rel = relation_from_json(j);
  json axioms = json::array();
  for (Axiom a : {Axiom::r1, Axiom::r2, Axiom::r3, Axiom::r4, Axiom::antisymmetry,
                  Axiom::disjunctivity}) {
    axioms.push_back(to_json(check_axiom(rel, a)));
  }
  const bool r = is_r_relation(rel);
  return {json{{"r_relation", r}, {"axioms", axioms}}, {}, r ? "R-relation" : "not an R-relation"};
}

Output do_check(const Options& o) {
  const AxiomReport report = check_axiom(relation_from_json(read_json(o.in)), parse_axiom(o.axiom));
  return {to_json(report), {},
          std::string(to_string(report.axiom)) + (report.holds ? " holds" : " fails")};
}

Output do_close(const Options& o) {
  const TernaryRelation rel = relation_from_json(read_json(o.in));
  const ClosureResult result = [&] {
    if (o.op == "l12") return same_carrier_step(rel, l12(rel), "L12");
    if (o.op == "l3") return l3(rel);
    if (o.op == "l4") return same_carrier_step(rel, l4(rel), "L4");
    if (o.op == "l") return r_closure(rel);
    if (o.op == "antisym-step") return antisym_step(rel);
    if (o.op == "antisym") return antisymmetric_closure(rel);
    throw UsageError("unknown --op '" + o.op + "'");
  }();
  std::string summary;
  for (const auto& step : result.trace) {
    summary += (summary.empty() ? "" : ", ") + step.step + (step.changed ? "" : " (no change)");
  }
  return {to_json(result), {}, summary};
}

std::vector<TernaryRelation> two_relations(const Options& o) {
  return {relation_from_json(read_json(o.in)), relation_from_json(read_json(o.in2))};
}

Output do_meet(const Options& o) {
  const auto rels = two_relations(o);
  const TernaryRelation r = meet(rels);
  return {to_json(r), {}, count_summary(r.count(), "triples")};
}

Output do_join(const Options& o) {
  const auto rels = two_relations(o);
  const TernaryRelation r = join(rels);
  return {to_json(r), {}, count_summary(r.count(), "triples")};
}

Output do_pullback(const Options& o) {
  const TernaryRelation rel = relation_from_json(read_json(o.in));
  const json map = read_json(o.over);
  const Carrier domain(map.at("domain").get<std::vector<Label>>());
  const auto assignment = assignment_from_json(map, domain, rel.carrier());
  const TernaryRelation r = pullback(domain, assignment, rel);
  return {to_json(r), {}, count_summary(r.count(), "triples")};
}

Output do_lift(const Options& o) {
  const TernaryRelation r = initial_lift(cone_from_json(read_json(o.in)));
  return {to_json(r), {}, count_summary(r.count(), "triples")};
}

Output do_enumerate(const Options& o) {
  const json j = read_json(o.in);
  const Carrier carrier(j.at("elements").get<std::vector<Label>>());
  const RelationFilter filter = parse_filter(o.filter);
  const auto rels = enumerate_relations(carrier, filter, max_carrier());
  json list = json::array();
  for (const auto& r : rels) list.push_back(to_json(r));
  return {json{{"filter", to_string(filter)}, {"count", rels.size()}, {"relations", list}}, {},
          count_summary(rels.size(), "relations")};
}

Output do_from_lattice(const Options& o) {
  const TernaryRelation r = betweenness_from_lattice(lattice_from_json(read_json(o.in)));
  return {to_json(r), {}, count_summary(r.count(), "triples")};
}

Output do_recover_order(const Options& o) {
  const FinitePoset p = recover_order(relation_from_json(read_json(o.in)), o.beta);
  return {to_json(p), {}, count_summary(p.covers().size(), "covering pairs")};
}

Output do_detect_bounds(const Options& o) {
  const auto bounds = detect_bounds(relation_from_json(read_json(o.in)));
  json list = json::array();
  for (const auto& b : bounds) list.push_back(to_json(b));
  return {json{{"bounds", list}}, {}, count_summary(bounds.size(), "bound witnesses")};
}

Output do_classify(const Options& o) {
  const json j = read_json(o.in);
  TernaryRelation rel;
  std::string beta = o.beta;
  if (j.contains("leq")) {
    const FiniteLattice lattice = lattice_from_json(j);
    rel = betweenness_from_lattice(lattice);
    if (beta == "top") beta = lattice.carrier()[lattice.top()];
    if (beta == "bottom") beta = lattice.carrier()[lattice.bottom()];
  } else {
    rel = relation_from_json(j);
  }
  const auto bounds = detect_bounds(rel);
  const auto it = std::find_if(bounds.begin(), bounds.end(), [&](const BoundWitness& b) {
    return beta.empty() || b.beta == beta;
  });
  if (it == bounds.end()) throw Error(ErrorCode::invalid_witness, "no bound witness found");
  json doc = to_json(classify_via_betweenness(rel, *it));
  doc["witness"] = to_json(*it);
  return {doc, {}, "alpha=" + it->alpha + " beta=" + it->beta};
}

Output do_classify_oracle(const Options& o) {
  return {to_json(classify_direct(lattice_from_json(read_json(o.in)))), {}, "direct lattice checks"};
}

Output do_reflect(const Options& o) {
  const FiniteLattice lattice = lattice_from_json(read_json(o.in));
  const Reflection r = distributive_reflection(lattice);
  return {to_json(r, lattice.carrier()), {}, count_summary(r.lattice.size(), "elements")};
}

Output do_dm(const Options& o) {
  const Completion c = dm_completion(poset_from_json(read_json(o.in)));
  return {to_json(c), {}, count_summary(c.lattice.size(), "cuts")};
}

Output do_dm_report(const Options& o) {
  const Report r = dm_betweenness_report(poset_from_json(read_json(o.in)));
  return {to_json(r), {}, r.holds ? "holds" : "fails"};
}

Output do_embed(const Options& o) {
  const auto rels = two_relations(o);
  const auto found = find_embeddings(rels[0], rels[1]);
  json list = json::array();
  for (const auto& e : found) list.push_back(to_json(e));
  return {json{{"count", found.size()}, {"embeddings", list}}, {},
          count_summary(found.size(), "strong embeddings")};
}

Output do_jep(const Options& o) {
  const auto rels = two_relations(o);
  const Joint joint = jep(rels[0], rels[1]);
  return {to_json(joint), {}, count_summary(joint.result.order(), "points")};
}

std::vector<Index> by_label(const Carrier& from, const Carrier& to) {
  std::vector<Index> out;
  for (const Label& l : from) out.push_back(to.index_of(l));
  return out;
}

Output do_amalgamate(const Options& o) {
  const TernaryRelation a = relation_from_json(read_json(o.over));
  const auto rels = two_relations(o);
  const Amalgam amalgam = amalgamate(a, rels[0], rels[1], by_label(a.carrier(), rels[0].carrier()),
                                     by_label(a.carrier(), rels[1].carrier()));
  return {to_json(amalgam), {},
          count_summary(amalgam.result.order(), "points") +
              (amalgam.closure_applied ? ", closure applied" : "")};
}

Output do_chain(const Options& o) {
  const ChainReport report = fraisse_chain(o.size_bound, o.rounds, o.seed);
  return {to_json(report), {},
          count_summary(report.last().order(), "points") + ", " +
              count_summary(report.pending.size(), "pending requests")};
}

Output do_audit(const Options& o) {
  const AuditReport report = audit_extension_property(relation_from_json(read_json(o.in)), o.k);
  return {to_json(report), {},
          count_summary(report.unmet.size(), "unmet") + " of " + std::to_string(report.requests)};
}

Output do_homogeneity(const Options& o) {
  const HomogeneityReport report = check_partial_homogeneity(relation_from_json(read_json(o.in)), o.k);
  return {to_json(report), {}, count_summary(report.failure_count, "failures")};
}

Output do_dot(const Options& o) {
  const json j = read_json(o.in);
  if (j.contains("leq")) return {{}, hasse_dot(poset_from_json(j)), "Hasse diagram"};
  std::optional<std::pair<Label, Label>> pair;
  if (!o.pair.empty()) {
    const auto comma = o.pair.find(',');
    if (comma == std::string::npos) throw UsageError("--pair expects a,b");
    pair.emplace(o.pair.substr(0, comma), o.pair.substr(comma + 1));
  }
  return {{}, interval_dot(relation_from_json(j), pair), "interval graph"};
}

enum Flag : unsigned {
  in = 1U << 0,
  in2 = 1U << 1,
  over = 1U << 2,
  op = 1U << 3,
  axiom = 1U << 4,
  filter = 1U << 5,
  beta = 1U << 6,
  beta_optional = 1U << 7,
  pair = 1U << 8,
  chain = 1U << 9,
  k = 1U << 10,
};

struct Verb {
  const char* name;
  const char* help;
  unsigned flags;
  Output (*handler)(const Options&);
};

constexpr Verb verbs[] = {
    {"validate", "Check a relation, road system, or order file", in, do_validate},
    {"check", "Decide one axiom", in | axiom, do_check},
    {"close", "Apply a closure operator", in | op, do_close},
    {"meet", "Intersection of two R-relations", in | in2, do_meet},
    {"join", "Least R-relation containing both", in | in2, do_join},
    {"pullback", "Largest R-relation making a map monotone", in | over, do_pullback},
    {"lift", "Initial lift of a cone", in, do_lift},
    {"enumerate", "All relations on a carrier passing a filter", in | filter, do_enumerate},
    {"from-lattice", "Betweenness of a lattice", in, do_from_lattice},
    {"recover-order", "Order read off intervals to beta", in | beta, do_recover_order},
    {"detect-bounds", "Bound witnesses of a relation", in, do_detect_bounds},
    {"classify", "Lattice properties from betweenness", in | beta_optional, do_classify},
    {"classify-oracle", "Lattice properties checked directly", in, do_classify_oracle},
    {"reflect", "Distributive reflection of a lattice", in, do_reflect},
    {"dm", "Dedekind-MacNeille completion of a poset", in, do_dm},
    {"dm-report", "Convex betweenness against the completion", in, do_dm_report},
    {"embed", "Strong embeddings of one relation into another", in | in2, do_embed},
    {"jep", "Joint embedding of two R-structures", in | in2, do_jep},
    {"amalgamate", "Amalgam of --in and --in2 over --over", in | in2 | over, do_amalgamate},
    {"chain", "Finite approximation chain of the limit", chain, do_chain},
    {"audit", "Extension property audit", in | k, do_audit},
    {"homogeneity", "One-step homogeneity scan", in | k, do_homogeneity},
    {"dot", "Graphviz export", in | pair, do_dot},
};

void write(const Output& result, const Options& o, std::ostream& out) {
  const std::string body = result.text.empty() ? result.doc.dump(2) + "\n" : result.text;
  if (o.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw UsageError("cannot write '" + o.out + "'");
  file << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betweenness relations, closures, lattices and amalgamation"};
  app.name("betweenness");
  app.require_subcommand(1);
  Options o;
  std::map<const CLI::App*, const Verb*> chosen;
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    chosen[sub] = &v;
    if (v.flags & in) sub->add_option("--in", o.in, "Input JSON file")->required();
    if (v.flags & in2) sub->add_option("--in2", o.in2, "Second input JSON file")->required();
    if (v.flags & over) {
      sub->add_option("--over", o.over, v.handler == do_pullback ? "Map file" : "Base relation")
          ->required();
    }
    if (v.flags & op) {
      sub->add_option("--op", o.op, "l12|l3|l4|l|antisym-step|antisym")
          ->required()
          ->check(CLI::IsMember({"l12", "l3", "l4", "l", "antisym-step", "antisym"}));
    }
    if (v.flags & axiom) sub->add_option("--axiom", o.axiom, "R1..R4, ANTISYM or DISJ")->required();
    if (v.flags & filter) sub->add_option("--filter", o.filter, "ALL_R, ANTISYM_R or R3_ONLY");
    if (v.flags & beta) sub->add_option("--beta", o.beta, "Base point")->required();
    if (v.flags & beta_optional) sub->add_option("--beta", o.beta, "Base point, or top");
    if (v.flags & pair) sub->add_option("--pair", o.pair, "Highlight the interval a,b");
    if (v.flags & chain) {
      sub->add_option("--size-bound", o.size_bound, "Largest extension size");
      sub->add_option("--rounds", o.rounds, "Rounds to run");
      sub->add_option("--seed", o.seed, "Queue shuffle seed");
    }
    if (v.flags & k) sub->add_option("--k", o.k, "Substructure size bound");
    sub->add_option("--out", o.out, "Write output here instead of stdout");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  const Verb* verb = nullptr;
  for (const CLI::App* sub : app.get_subcommands()) verb = chosen.at(sub);
  try {
    const Output result = verb->handler(o);
    write(result, o, out);
    if (!result.summary.empty()) err << verb->name << ": " << result.summary << "\n";
    return 0;
  } catch (const Error& e) {
    out << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    err << verb->name << ": " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << verb->name << ": " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << verb->name << ": malformed input: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace btw::cli
