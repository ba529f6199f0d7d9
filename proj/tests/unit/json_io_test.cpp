#include <gtest/gtest.h>

#include "raag/error.hpp"
#include "raag/json_io.hpp"

namespace raag {
namespace {

TEST(JsonIo, GraphRoundTrip) {
  const Graph g = Graph::cycle(5);
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  const Graph p = parse_graph(R"({"vertices": ["x", "y"], "edges": [["x", "y"]]})");
  EXPECT_TRUE(p.adjacent(0, 1));
  EXPECT_EQ(parse_graph(R"({"vertices": ["x"]})").size(), 1U);
}

TEST(JsonIo, RejectsMalformedGraphs) {
  EXPECT_THROW(parse_graph("{"), ParseError);
  EXPECT_THROW(parse_graph(R"({"edges": []})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices": [1, 2]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices": ["a"], "edges": [["a"]]})"), ParseError);
  EXPECT_THROW(load_graph("/nonexistent/graph.json"), ParseError);
}

TEST(JsonIo, BigIntegersAreStrings) {
  const Graph g = Graph::empty(1);
  const auto w = parse_word("a^123456789012345678901234567890", g);
  EXPECT_EQ(to_json(w, g)["syllables"][0]["exponent"], "123456789012345678901234567890");
  const USeries s = USeries::from_integers({1, -2}, 2);
  EXPECT_EQ(to_json(s), nlohmann::json::array({"1", "-2"}));
}

TEST(JsonIo, SeriesTerms) {
  const GraphPtr g = share(Graph::empty(2));
  PCSeries x(g, CoefficientDomain::rationals(), 4);
  x.add_term(parse_trace("ba", *g), mpq_class(-1, 2));
  x.add_term(Trace{}, 1);
  const auto j = to_json(x);
  EXPECT_EQ(j["terms"][0]["trace"], "");
  EXPECT_EQ(j["terms"][1]["trace"], "ba");
  EXPECT_EQ(j["terms"][1]["coeff"], "-1/2");
}

TEST(JsonIo, Valuations) {
  EXPECT_EQ(to_json(Valuation{3, true})["value"], 3);
  EXPECT_EQ(to_json(Valuation{8, false})["bound"], ">= 8");
}

}  // namespace
}  // namespace raag
