#include <gtest/gtest.h>

#include "knotvol/error.hpp"
#include "knotvol/jones.hpp"
#include "oracles/colored.hpp"
#include "oracles/fixtures.hpp"
#include "support.hpp"

using namespace knotvol;

namespace {

LaurentPolynomial q_poly(std::vector<std::pair<int, mpz_class>> terms) {
  return LaurentPolynomial::from_terms(std::move(terms));
}

}  // namespace

TEST(Jones, UnknotIsOne) {
  EXPECT_EQ(jones2(LinkDiagram::unknot()), LaurentPolynomial::constant(1));
  EXPECT_EQ(jones2(parse_pd("X 1 1 2 2")), LaurentPolynomial::constant(1));
  EXPECT_EQ(colored_jones3(LinkDiagram::unknot()), LaurentPolynomial::constant(1));
  EXPECT_EQ(colored_jones3(parse_pd("X 1 1 2 2")), LaurentPolynomial::constant(1));
}

TEST(Jones, NineTwentyMatchesPublishedDisplay) {
  const auto expected = q_poly({{-9, -1}, {-8, 3}, {-7, -5}, {-6, 6}, {-5, -7}, {-4, 7},
                                {-3, -5}, {-2, 4}, {-1, -2}, {0, 1}});
  EXPECT_EQ(jones2(support::knot("9_20")), expected);
}

TEST(Jones, AgreesWithPublishedPolynomialsUnderQEqualsInverseT) {
  const auto published = oracle::published_jones(support::kJonesFixture);
  ASSERT_EQ(published.size(), support::table().records().size());
  for (const auto& r : support::table().records()) {
    EXPECT_EQ(jones2(parse_pd(r.pd)), published.at(r.name).reflected()) << r.name;
  }
}

TEST(Jones, MirrorInvertsQ) {
  for (const auto& r : support::table().records()) {
    const auto d = parse_pd(r.pd);
    EXPECT_EQ(jones2(d.mirror()), jones2(d).reflected()) << r.name;
  }
}

TEST(Jones, KnotsEvaluateToOneAtQEqualsOne) {
  for (const auto& r : support::table().records()) {
    EXPECT_EQ(jones2(parse_pd(r.pd)).evaluate_at_one(), 1) << r.name;
  }
}

TEST(Jones, HopfLinkHasHalfIntegerPowers) {
  const auto j = jones2(parse_pd("X 1 3 2 4\nX 3 1 4 2"));
  EXPECT_EQ(j.exponent_scale(), 2);
  EXPECT_EQ(j.evaluate_at_one(), -2);
}

TEST(JonesProperties, SpanEqualsCrossingsAndExtremeCoefficientsAreUnits) {
  for (const auto& r : support::table().records()) {
    const auto h = head_tail(jones2(parse_pd(r.pd)), 2);
    EXPECT_EQ(h.r, r.crossings) << r.name;
    EXPECT_EQ(h.a, 1) << r.name;
    EXPECT_EQ(h.alpha, 1) << r.name;
  }
}

TEST(ColoredJones, FigureEightMatchesCyclotomicFormula) {
  const auto d = support::knot("4_1");
  EXPECT_EQ(jones2(d), oracle::figure_eight_colored(2));
  const auto j3 = colored_jones3(d);
  EXPECT_EQ(j3, oracle::figure_eight_colored(3));
  EXPECT_EQ(j3, j3.reflected());
}

TEST(ColoredJones, NineTwentyEndsMatchPublishedDisplay) {
  const auto j = colored_jones3(support::knot("9_20"));
  EXPECT_EQ(j.min_exponent(), -25);
  EXPECT_EQ(j.max_exponent(), 2);
  EXPECT_EQ(j.coefficient(-25), 1);
  EXPECT_EQ(j.coefficient(-24), -3);
  EXPECT_EQ(j.coefficient(-23), 2);
  EXPECT_EQ(j.coefficient(0), -1);
  EXPECT_EQ(j.coefficient(1), -2);
  EXPECT_EQ(j.coefficient(2), 1);
}

TEST(ColoredJones, MirrorInvertsQ) {
  const auto d = support::knot("5_2");
  EXPECT_EQ(colored_jones3(d.mirror()), colored_jones3(d).reflected());
}

TEST(ColoredJones, KnotsEvaluateToOneAtQEqualsOne) {
  for (const char* name : {"3_1", "5_2", "6_2", "7_7"}) {
    EXPECT_EQ(colored_jones3(support::knot(name)).evaluate_at_one(), 1) << name;
  }
}

TEST(ColoredJones, BaseCrossingBudget) {
  ColoredOptions tight;
  tight.max_base_crossings = 8;
  EXPECT_THROW((void)colored_jones3(support::knot("9_20"), tight), ResourceError);
}

TEST(ColoredJonesProperties, HeadAndTailAreStableBetweenColors) {
  for (const auto& r : support::table().records()) {
    if (r.crossings > 8) continue;
    const auto d = parse_pd(r.pd);
    const auto h2 = head_tail(jones2(d), 2);
    const auto h3 = head_tail(colored_jones3(d), 3);
    EXPECT_EQ(h3.a, 1) << r.name;
    EXPECT_EQ(h3.alpha, 1) << r.name;
    EXPECT_EQ(h3.b, h2.b) << r.name;
    EXPECT_EQ(h3.beta, h2.beta) << r.name;
  }
}

TEST(HeadTail, NineTwentyCoefficients) {
  const auto d = support::knot("9_20");
  const auto h2 = head_tail(jones2(d), 2);
  EXPECT_EQ(h2.a, 1);
  EXPECT_EQ(h2.b, 2);
  EXPECT_EQ(h2.c, 4);
  EXPECT_EQ(h2.alpha, 1);
  EXPECT_EQ(h2.beta, 3);
  EXPECT_EQ(h2.gamma, 5);
  EXPECT_EQ(h2.k, 0);
  EXPECT_EQ(h2.r, 9);
  const auto h3 = head_tail(colored_jones3(d), 3);
  EXPECT_EQ(h3.c, -1);
  EXPECT_EQ(h3.gamma, 2);
  EXPECT_EQ(h3.b, 2);
  EXPECT_EQ(h3.beta, 3);
}

TEST(HeadTail, RejectsShortSpan) {
  EXPECT_THROW((void)head_tail(LaurentPolynomial::constant(1), 2), ExtractionError);
  EXPECT_THROW((void)head_tail(q_poly({{0, 1}, {1, -1}}), 2), ExtractionError);
}

TEST(HeadTail, RejectsBrokenSignPattern) {
  // q^2 + q + 1: the second coefficient has the leading sign.
  EXPECT_THROW((void)head_tail(q_poly({{0, 1}, {1, 1}, {2, 1}}), 2), ConventionError);
}
