#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "knotvol/bounds.hpp"
#include "knotvol/error.hpp"
#include "support.hpp"

using namespace knotvol;

namespace {

// Cl2(theta) = sum sin(n theta) / n^2, summed directly.
double slow_clausen(double theta) {
  double sum = 0;
  for (int n = 1; n < 2000000; ++n) sum += std::sin(n * theta) / (static_cast<double>(n) * n);
  return sum;
}

HeadTail coefficients(long b, long c, long beta, long gamma, int n) {
  HeadTail h;
  h.n = n;
  h.a = h.alpha = 1;
  h.b = b;
  h.c = c;
  h.beta = beta;
  h.gamma = gamma;
  return h;
}

}  // namespace

TEST(V3, SeriesValue) {
  EXPECT_NEAR(compute_v3(), 1.0149416064096536, 1e-15);
  EXPECT_DOUBLE_EQ(kV3, compute_v3());
}

TEST(V3, AgreesWithSlowFourierSeries) {
  const double theta = 2 * std::numbers::pi / 3;
  EXPECT_NEAR(clausen2(theta), slow_clausen(theta), 1e-6);
  EXPECT_NEAR(clausen2(1.0), slow_clausen(1.0), 1e-6);
  EXPECT_NEAR(lobachevsky(std::numbers::pi / 6), 0.5 * slow_clausen(std::numbers::pi / 3), 1e-6);
}

TEST(Adams, Values) {
  EXPECT_EQ(adams_bound(9, false).multiple, 20);
  EXPECT_TRUE(adams_bound(9, false).applicable);
  EXPECT_FALSE(adams_bound(4, true).applicable);
  const auto degenerate = adams_bound(4, false);
  EXPECT_EQ(degenerate.multiple, 0);
  EXPECT_FALSE(degenerate.applicable);
}

TEST(AgolThurston, Values) {
  EXPECT_EQ(agol_thurston_bound(2).multiple, 10);
  EXPECT_EQ(agol_thurston_bound(5).multiple, 40);
  EXPECT_FALSE(agol_thurston_bound(1).applicable);
}

TEST(Refined, CaseSplit) {
  const auto fig8 = refined_bound(twist_profile_from_lengths({2, 2}));
  EXPECT_EQ(fig8.multiple, 6);
  EXPECT_EQ(fig8.a, 6);
  const auto nine_twenty = refined_bound(twist_profile_from_lengths({3, 2, 2, 1, 1}));
  EXPECT_EQ(nine_twenty.multiple, 21);
  EXPECT_EQ(nine_twenty.a, 7);
  EXPECT_EQ(refined_bound(twist_profile_from_lengths({4, 3})).a, 10);
}

TEST(RefinedDelta, CaseSplit) {
  const auto fig8 = refined_delta_bound(twist_profile_from_lengths({2, 2}), 4);
  EXPECT_EQ(fig8.multiple, 4);
  EXPECT_EQ(fig8.a, 4);
  const auto ones = refined_delta_bound(twist_profile_from_lengths({1, 1}), 0);
  EXPECT_EQ(ones.multiple, 4);
  EXPECT_EQ(ones.a, 4);
  EXPECT_EQ(refined_delta_bound(twist_profile_from_lengths({3, 1}), 0).a, 6);
  EXPECT_EQ(refined_delta_bound(twist_profile_from_lengths({5, 3}), 0).a, 8);
}

TEST(Coefficient, NineTwentyFromPublishedValues) {
  const auto h2 = coefficients(2, 4, 3, 5, 2);
  const auto h3 = coefficients(2, -1, 3, 2, 3);
  const auto c = coefficient_bound(h2, h3);
  EXPECT_EQ(c.multiple, 28);
  EXPECT_EQ(c.a, 10);
  EXPECT_EQ(volumish_bound(h2).multiple, 40);
}

TEST(Coefficient, EqualityBranchUsesFour) {
  // b2 + beta2 = (c2 - c3) + (gamma2 - gamma3) = 4.
  const auto c = coefficient_bound(coefficients(2, 3, 2, 3, 2), coefficients(2, 1, 2, 1, 3));
  EXPECT_EQ(c.a, 4);
  EXPECT_EQ(c.multiple, 6 * 4 - 2 * 4 - 4);
}

TEST(Coefficient, UnstableSecondCoefficientIsAConventionError) {
  EXPECT_THROW((void)coefficient_bound(coefficients(2, 4, 3, 5, 2), coefficients(1, -1, 3, 2, 3)),
               ConventionError);
}

TEST(Residuals, NineTwentyPublishedValues) {
  GraphStats s;
  s.tau_W = 1;
  s.tau_B = 2;
  const auto r = identity_residuals(twist_profile_from_lengths({3, 2, 2, 1, 1}), s,
                                  coefficients(2, 4, 3, 5, 2), coefficients(2, -1, 3, 2, 3));
  EXPECT_EQ(r, (std::array<long, 3>{0, 0, 0}));
}

TEST(Residuals, MismatchedInputsAreNonzero) {
  GraphStats s;
  const auto r = identity_residuals(twist_profile_from_lengths({2, 2}), s, coefficients(2, 4, 3, 5, 2),
                                  coefficients(2, -1, 3, 2, 3));
  EXPECT_NE(r, (std::array<long, 3>{0, 0, 0}));
}

TEST(Report, BestAndSlack) {
  BoundsReport r;
  r.adams = adams_bound(4, true);
  r.agol_thurston = agol_thurston_bound(2);
  r.refined = refined_bound(twist_profile_from_lengths({2, 2}));
  r.refined_delta = refined_delta_bound(twist_profile_from_lengths({2, 2}), 4);
  r.volumish = volumish_bound(coefficients(1, 1, 1, 1, 2));
  finalize(r, 2 * kV3);
  ASSERT_TRUE(r.best);
  EXPECT_EQ(*r.best_name, "refined_delta");
  EXPECT_DOUBLE_EQ(*r.best, 4 * kV3);
  EXPECT_NEAR(*r.slack, 2 * kV3, 1e-12);
}

TEST(BoundProperties, RefinedNeverExceedsAgolThurston) {
  // Every profile with up to six twists of length 1..6.
  std::vector<int> lengths;
  std::function<void(int)> walk = [&](int depth) {
    if (lengths.size() >= 2) {
      const auto p = twist_profile_from_lengths(lengths);
      EXPECT_LE(refined_bound(p).multiple, agol_thurston_bound(p.t).multiple);
    }
    if (depth == 6) return;
    for (int len = lengths.empty() ? 1 : lengths.back(); len <= 6; ++len) {
      lengths.push_back(len);
      walk(depth + 1);
      lengths.pop_back();
    }
  };
  walk(0);
}
