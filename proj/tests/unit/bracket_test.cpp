#include <gtest/gtest.h>

#include <random>

#include "knotvol/bracket.hpp"
#include "knotvol/error.hpp"
#include "oracles/braids.hpp"
#include "oracles/state_sum.hpp"
#include "support.hpp"

using namespace knotvol;

TEST(Bracket, CrossinglessUnknotIsOne) {
  EXPECT_EQ(kauffman_bracket(LinkDiagram::unknot()), LaurentPolynomial::constant(1, Variable::A));
}

TEST(Bracket, PositiveKinkIsMinusACubed) {
  const auto kink = parse_pd("X 1 1 2 2");
  ASSERT_EQ(kink.sign(0), +1);
  EXPECT_EQ(kauffman_bracket(kink), LaurentPolynomial::monomial(-1, 3, Variable::A));
  EXPECT_EQ(kauffman_bracket(kink.mirror()), LaurentPolynomial::monomial(-1, -3, Variable::A));
}

TEST(Bracket, TrefoilMatchesFullStateSum) {
  const auto d = support::knot("3_1");
  EXPECT_EQ(kauffman_bracket(d), oracle::brute_force_bracket(d));
  EXPECT_EQ(kauffman_bracket(d).to_string(), "1*A^-7 - 1*A^-3 - 1*A^5");
}

TEST(Bracket, MatchesStateSumOnEveryTableKnotUpToEightCrossings) {
  int checked = 0;
  for (const auto& r : support::table().records()) {
    if (r.crossings > 8) continue;
    const auto d = parse_pd(r.pd);
    EXPECT_EQ(kauffman_bracket(d), oracle::brute_force_bracket(d)) << r.name;
    ++checked;
  }
  EXPECT_EQ(checked, 32);
}

TEST(Bracket, MatchesStateSumOnRandomBraidClosures) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const auto d = oracle::braid_closure(oracle::random_alternating_braid(rng, 2 + i % 4, 6 + i % 7));
    EXPECT_EQ(kauffman_bracket(d), oracle::brute_force_bracket(d)) << i;
  }
}

TEST(Bracket, MirrorReflectsTheVariable) {
  for (const char* name : {"5_2", "6_2", "7_4", "8_5"}) {
    const auto d = support::knot(name);
    EXPECT_EQ(kauffman_bracket(d.mirror()), kauffman_bracket(d).reflected()) << name;
  }
}

TEST(Bracket, CrossingBudgetIsEnforced) {
  BracketOptions tight;
  tight.max_crossings = 8;
  try {
    (void)kauffman_bracket(support::knot("9_20"), tight);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("max_crossings"), std::string::npos);
  }
  BracketOptions narrow;
  narrow.max_frontier = 2;
  EXPECT_THROW((void)kauffman_bracket(support::knot("9_20"), narrow), ResourceError);
}

TEST(Cable, StrandCountsScaleTheDiagram) {
  const auto d = support::knot("4_1");
  const std::vector<int> two{2};
  const auto g = cable(d, two);
  EXPECT_EQ(g.crossings.size(), 16u);
  EXPECT_EQ(g.free_loops, 0);
  EXPECT_EQ(g.edge_count, 32);
  const std::vector<int> none{0};
  const auto empty = cable(d, none);
  EXPECT_TRUE(empty.crossings.empty());
  EXPECT_EQ(bracket_unnormalized(empty), LaurentPolynomial::constant(1, Variable::A));
}

TEST(Cable, OneStrandIsTheDiagramItself) {
  const auto d = support::knot("6_3");
  const std::vector<int> one{1};
  EXPECT_EQ(bracket_unnormalized(cable(d, one)), bracket_unnormalized(planar_graph(d)));
}

TEST(Cable, DroppingOneComponentOfALinkLeavesTheOther) {
  // Hopf link.
  const auto hopf = parse_pd("X 1 3 2 4\nX 3 1 4 2");
  ASSERT_EQ(hopf.component_count(), 2);
  std::vector<int> strands{1, 0};
  const auto g = cable(hopf, strands);
  EXPECT_TRUE(g.crossings.empty());
  EXPECT_EQ(g.free_loops, 1);
  strands = {2, 0};
  EXPECT_EQ(cable(hopf, strands).free_loops, 2);
}

TEST(Contraction, OrderVisitsEveryCrossingOnce) {
  const auto g = planar_graph(support::knot("9_20"));
  auto order = contraction_order(g);
  ASSERT_EQ(order.size(), g.crossings.size());
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], static_cast<int>(i));
  EXPECT_LE(frontier_width(g, contraction_order(g)), 8u);
}
