#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "raag/error.hpp"
#include "raag/trace.hpp"
#include "suite.hpp"

namespace raag {
namespace {

std::string nf(const std::string& word, const Graph& g) {
  return Trace::canonical(parse_trace(word, g).letters(), g).to_string(g);
}

TEST(Trace, CanonicalExamples) {
  const Graph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(nf("cba", path), "bca");
  EXPECT_EQ(nf("ab", Graph::empty(2)), "ab");
  EXPECT_EQ(nf("ba", Graph::complete(2)), "ab");
}

TEST(Trace, GreedyFormReachesTheOrbitMinimum) {
  // b < a < c with a commuting with b and c: a bubble sort of "cba" stalls on
  // "cab", but "acb" is in the orbit.
  const Graph g({"b", "a", "c"}, {{"a", "b"}, {"a", "c"}});
  EXPECT_EQ(nf("cba", g), "acb");
}

TEST(Trace, CanonicalMatchesOrbitMinimum) {
  std::mt19937 rng(7);
  for (const auto& [name, g] : suite::graphs()) {
    for (int trial = 0; trial < 200; ++trial) {
      oracle::Word w(rng() % 8);
      for (auto& v : w) v = static_cast<GeneratorId>(rng() % g->size());
      EXPECT_EQ(Trace::canonical(w, *g).letters(), oracle::orbit_min(w, *g)) << name;
    }
  }
}

TEST(Trace, EnumerationCounts) {
  const Graph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(enumerate_traces(path, 2).size(), 7U);
  // multisets on K_d, words on the empty graph
  EXPECT_EQ(enumerate_traces(Graph::complete(3), 4).size(), 15U);
  EXPECT_EQ(enumerate_traces(Graph::empty(3), 4).size(), 81U);
  EXPECT_EQ(enumerate_traces(path, 0).size(), 1U);
}

TEST(Trace, EnumerationMatchesBruteForce) {
  for (const auto& [name, g] : suite::graphs()) {
    for (std::size_t n = 0; n <= 4; ++n) {
      std::set<oracle::Word> ours;
      for (const auto& t : enumerate_traces(*g, n)) ours.insert(t.letters());
      EXPECT_EQ(ours, oracle::traces(*g, n)) << name << " n=" << n;
    }
  }
}

TEST(Trace, FrontLettersAndRemoval) {
  const Graph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const Trace t = parse_trace("bca", path);
  EXPECT_EQ(front_letters(t, path), (std::vector<GeneratorId>{1, 2}));
  EXPECT_EQ(remove_front(t, 2, path).to_string(path), "ab");
  EXPECT_EQ(remove_front(parse_trace("cab", path), 2, path).to_string(path), "ab");
  EXPECT_TRUE(front_letters(Trace{}, path).empty());
}

TEST(Trace, ParseRejectsUnknownLetters) {
  EXPECT_THROW(parse_trace("abz", Graph::empty(2)), ParseError);
  const Graph long_names({"x1", "x2"}, {});
  EXPECT_EQ(parse_trace("x2 x1", long_names).to_string(long_names), "x2 x1");
}

TEST(Trace, ConcatIsAssociative) {
  std::mt19937 rng(11);
  const auto& g = *suite::graphs()[5].graph;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Trace> t;
    for (int k = 0; k < 3; ++k) {
      oracle::Word w(rng() % 4);
      for (auto& v : w) v = static_cast<GeneratorId>(rng() % g.size());
      t.push_back(Trace::canonical(w, g));
    }
    EXPECT_EQ(concat(concat(t[0], t[1], g), t[2], g), concat(t[0], concat(t[1], t[2], g), g));
  }
}

}  // namespace
}  // namespace raag
