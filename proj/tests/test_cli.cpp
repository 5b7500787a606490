#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "betweenness/error.hpp"
#include "betweenness//dot.hpp"
#include "betweenness/fixtures.hpp"
#include "betweenness/json_io.hpp"
#include "cli.hpp"

using namespace btw;
using btw::json_io::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("btw_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const json& j) { return write_text(name, j.dump()); }
  std::string write_text(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST(JsonIo, RelationRoundTrip) {
  const TernaryRelation ex7 = fixtures::ex7();
  EXPECT_EQ(json_io::relation_from_json(json_io::to_json(ex7)), ex7);
  const json mirrored = json::parse(R"({"elements":["c","a","b"],"triples":[["a","b","c"]]})");
  const TernaryRelation rel = json_io::relation_from_json(mirrored);
  EXPECT_TRUE(rel.contains("c", "b", "a"));
  EXPECT_EQ(rel.count(), 2U);
  const json plain = json::parse(R"({"elements":["a","b","c"],"triples":[["a","b","c"]],"r2_closure":false})");
  EXPECT_EQ(json_io::relation_from_json(plain).count(), 1U);
  const json bottom = json::parse(R"({"elements":["a","b"],"triples":[],"include_bottom":true})");
  EXPECT_EQ(json_io::relation_from_json(bottom), bottom_relation(Carrier({"a", "b"})));
  EXPECT_THROW((void)json_io::relation_from_json(json::parse(R"({"elements":["a"],"triples":[["a","q","a"]]})")),
               Error);
}

TEST(JsonIo, LatticeRoundTrip) {
  const FiniteLattice m3 = fixtures::m3();
  EXPECT_EQ(json_io::lattice_from_json(json_io::to_json(m3)), m3);
  const RoadSystem rs = intervals_as_roads(fixtures::tri());
  EXPECT_EQ(json_io::roads_from_json(json_io::to_json(rs)), rs);
}

TEST(Dot, ChainIsAPath) {
  const std::string dot = hasse_dot(fixtures::c3().poset());
  EXPECT_NE(dot.find("\"0\" -> \"1\""), std::string::npos);
  EXPECT_NE(dot.find("\"1\" -> \"2\""), std::string::npos);
  EXPECT_EQ(dot.find("\"0\" -> \"2\""), std::string::npos);
}

TEST(Dot, DiamondHasFourEdges) {
  const std::string dot = hasse_dot(fixtures::b4().poset());
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
  EXPECT_EQ(edges, 4U);
}

TEST(Dot, IntervalHighlight) {
  const std::string dot = interval_dot(fixtures::ex7(), std::make_pair(Label("a"), Label("c")));
  for (const char* x : {"a", "b", "c", "d1"}) {
    const std::string line = std::string("\"") + x + "\" [style=filled";
    EXPECT_NE(dot.find(line), std::string::npos) << x;
  }
  EXPECT_EQ(dot.find("\"y\" [style=filled"), std::string::npos);
}

TEST_F(CliTest, CheckR4OnRelationOne) {
  const auto in = write("r1.json", json_io::to_json(fixtures::relation_1()));
  const Outcome r = run({"check", "--axiom", "R4", "--in", in});
  EXPECT_EQ(r.code, 0);
  const json doc = r.doc();
  EXPECT_FALSE(doc["holds"].get<bool>());
  const json expected = json::array({"a", "x", "c", "b", "d1"});
  bool found = false;
  for (const auto& w : doc["witnesses"]) found = found || w == expected;
  EXPECT_TRUE(found);
  EXPECT_NE(r.err.find("check: R4 fails"), std::string::npos);
}

TEST_F(CliTest, CloseAntisymOnEx7) {
  const auto in = write("ex7.json", json_io::to_json(fixtures::ex7()));
  const Outcome r = run({"close", "--op", "antisym", "--in", in});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = r.doc();
  std::vector<std::string> steps;
  for (const auto& s : doc["trace"]) steps.push_back(s["step"]);
  EXPECT_EQ(steps, (std::vector<std::string>{"L_A", "L4", "L_A", "L4"}));
  EXPECT_EQ(doc["relation"]["elements"].size(), 5U);
  EXPECT_EQ(doc["quotient"]["map"]["x"], "c");
}

TEST_F(CliTest, ClassifyDiamond) {
  const auto in = write("m3.json", json_io::to_json(fixtures::m3()));
  const Outcome r = run({"classify", "--in", in, "--beta", "top"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.doc()["distributive"]["holds"].get<bool>());
  EXPECT_TRUE(r.doc()["modular"]["holds"].get<bool>());
}

TEST_F(CliTest, ProducedOutputIsConsumed) {
  const auto lattice = write("b4.json", json_io::to_json(fixtures::b4()));
  const auto rel = path("b4_rel.json");
  ASSERT_EQ(run({"from-lattice", "--in", lattice, "--out", rel}).code, 0);
  const Outcome bounds = run({"detect-bounds", "--in", rel});
  ASSERT_EQ(bounds.code, 0);
  EXPECT_EQ(bounds.doc()["bounds"].size(), 4U);
  const Outcome order = run({"recover-order", "--in", rel, "--beta", "1"});
  ASSERT_EQ(order.code, 0);
  const auto poset = write("order.json", order.doc());
  EXPECT_EQ(run({"validate", "--in", poset}).doc()["lattice"], true);

  const auto closed = path("closed.json");
  ASSERT_EQ(run({"close", "--op", "l", "--in", rel, "--out", closed}).code, 0);
  std::ifstream f(closed);
  const json cdoc = json::parse(f);
  const auto again = write("again.json", cdoc["relation"]);
  EXPECT_EQ(run({"validate", "--in", again}).doc()["r_relation"], true);
}

TEST_F(CliTest, Deterministic) {
  const Outcome a = run({"chain", "--size-bound", "3", "--rounds", "1", "--seed", "9"});
  const Outcome b = run({"chain", "--size-bound", "3", "--rounds", "1", "--seed", "9"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto in = write("tri.json", json_io::to_json(fixtures::tri()));
  EXPECT_EQ(run({"audit", "--in", in, "--k", "3"}).out, run({"audit", "--in", in, "--k", "3"}).out);
}

TEST_F(CliTest, ExitCodes) {
  const auto ex7 = write("ex7.json", json_io::to_json(fixtures::ex7()));
  const Outcome domain = run({"close", "--op", "antisym", "--in", write("empty2.json", json::parse(
                                                                   R"({"elements":["a","b"],"triples":[]})"))});
  EXPECT_EQ(domain.code, 1);
  EXPECT_EQ(domain.doc()["error"], "not_r_relation");

  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", "--in", ex7}).code, 2);
  EXPECT_EQ(run({"close", "--op", "l5", "--in", ex7}).code, 2);
  EXPECT_EQ(run({"check", "--axiom", "R4", "--in", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"check", "--axiom", "R4", "--in", write_text("bad.json", "{nope")}).code, 2);
  EXPECT_EQ(run({"check", "--axiom", "R9", "--in", ex7}).code, 1);
}

TEST_F(CliTest, EnumerateHonoursGuard) {
  const auto in = write("five.json", json::parse(R"({"elements":["a","b","c","d","e"]})"));
  const Outcome r = run({"enumerate", "--in", in});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc()["error"], "carrier_too_large");
  const auto three = write("three.json", json::parse(R"({"elements":["a","b","c"]})"));
  EXPECT_EQ(run({"enumerate", "--in", three}).doc()["count"], 8);
}

TEST_F(CliTest, DotVerb) {
  const auto lattice = write("c3.json", json_io::to_json(fixtures::c3()));
  const Outcome r = run({"dot", "--in", lattice});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0U);
  const auto rel = write("ex7.json", json_io::to_json(fixtures::ex7()));
  const Outcome pair = run({"dot", "--in", rel, "--pair", "a,c"});
  ASSERT_EQ(pair.code, 0);
  EXPECT_NE(pair.out.find("\"d1\" [style=filled"), std::string::npos);
}

TEST_F(CliTest, AmalgamateAndJep) {
  const auto tri = write("tri.json", json_io::to_json(fixtures::tri()));
  const auto point = write("pt.json", json::parse(R"({"elements":["a"],"triples":[["a","a","a"]]})"));
  const Outcome am = run({"amalgamate", "--over", point, "--in", tri, "--in2", tri});
  ASSERT_EQ(am.code, 0) << am.err;
  EXPECT_EQ(am.doc()["result"]["elements"].size(), 5U);
  const Outcome j = run({"jep", "--in", tri, "--in2", tri});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(j.doc()["result"]["elements"].size(), 6U);
}
