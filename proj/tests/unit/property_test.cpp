#include <gtest/gtest.h>

#include "oracles.hpp"
#include "raag/growth.hpp"
#include "raag/koszul.hpp"
#include "raag/lie_ranks.hpp"
#include "raag/magnus.hpp"
#include "suite.hpp"

namespace raag {
namespace {

class RandomGraph : public ::testing::TestWithParam<unsigned> {
 protected:
  GraphPtr graph() const { return share(suite::random_graph(2 + GetParam() % 4, 100 + GetParam())); }
};

TEST_P(RandomGraph, ReciprocityAndTraceCounts) {
  const GraphPtr g = graph();
  EXPECT_EQ(phi_R(*g, 10) * phi_S(*g, 10).negate_variable(), USeries::constant(1, 10));
  const auto a = phi_R(*g, 5).integer_coeffs();
  const auto q = magnus_span_rank(g, 1, 5, CoefficientDomain::rationals());
  const auto f2 = magnus_span_rank(g, 1, 5, CoefficientDomain::prime_field(2));
  for (std::size_t n = 0; n < 5; ++n) {
    EXPECT_EQ(a[n], oracle::traces(*g, n).size());
    EXPECT_EQ(a[n], q[n]);
    EXPECT_EQ(a[n], f2[n]);
  }
}

TEST_P(RandomGraph, GrowthMatchesPiles) {
  const GraphPtr g = graph();
  const auto spheres = oracle::spheres(*g, 3);
  const auto series = phi_A(*g, 4).integer_coeffs();
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(series[n], spheres[n]);
}

TEST_P(RandomGraph, LieRanksAgree) {
  const GraphPtr g = graph();
  const auto b = series_rank_lcs(*g, 4).values;
  EXPECT_EQ(bracket_rank_table(g, CoefficientDomain::rationals(), 4).values, b);
  for (const std::uint32_t p : {2U, 5U}) {
    EXPECT_EQ(restricted_rank_table(g, p, 4).values, series_rank_restricted(*g, p, 4).values);
    EXPECT_EQ(series_rank_restricted(*g, p, 4).values, restricted_from_lcs(b, p));
  }
}

TEST_P(RandomGraph, KoszulCertificate) {
  const auto r = verify_resolution(graph(), 5, CoefficientDomain::rationals());
  EXPECT_TRUE(r.ok()) << r.counterexample.value_or("");
}

TEST_P(RandomGraph, UnionJoinWithPath) {
  const auto r = union_join_identities(*graph(), Graph::path(3), 10);
  EXPECT_TRUE(r.ok());
}

TEST_P(RandomGraph, MagnusInjectiveOnBall) {
  const GraphPtr g = graph();
  const auto elements = ball(*g, 2);
  std::set<PCSeries::Terms> images;
  for (const auto& w : elements) images.insert(magnus(w, g, CoefficientDomain::integers(), 5).terms());
  EXPECT_EQ(images.size(), elements.size());
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraph, ::testing::Range(0U, 8U));

}  // namespace
}  // namespace raag
