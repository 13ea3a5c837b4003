#include "knotvol/bounds.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "knotvol/error.hpp"

namespace knotvol {

double clausen2(double theta) {
  if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) {
    throw std::domain_error("clausen2 series needs 0 < theta < 2 pi");
  }
  // Cl2(x) = x - x log x + sum_k zeta(2k) / (k (2k + 1)) x^(2k+1) / (2 pi)^(2k)
  const double ratio = (theta / (2.0 * std::numbers::pi)) * (theta / (2.0 * std::numbers::pi));
  double sum = theta - theta * std::log(theta);
  double power = theta;
  for (int k = 1; k < 200; ++k) {
    power *= ratio;
    const double term = std::riemann_zeta(2.0 * k) / (k * (2.0 * k + 1.0)) * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double lobachevsky(double theta) { return 0.5 * clausen2(2.0 * theta); }

double compute_v3() { return 3.0 * lobachevsky(std::numbers::pi / 3.0); }

namespace {

Bound make(std::string name, long multiple, int a) {
  Bound b;
  b.name = std::move(name);
  b.multiple = multiple;
  b.a = a;
  b.applicable = multiple > 0;
  if (!b.applicable) b.reason = "non-positive multiple of v3";
  return b;
}

Bound inapplicable(std::string name, std::string reason) {
  Bound b;
  b.name = std::move(name);
  b.reason = std::move(reason);
  return b;
}

long weighted_twists(const TwistProfile& p) {
  return 10L * p.g_i(4) + 8L * p.t_i(3) + 6L * p.t_i(2) + 4L * p.t_i(1);
}

}  // namespace

Bound adams_bound(int crossings, bool is_figure_eight) {
  if (is_figure_eight) return inapplicable("adams", "excluded for the figure-eight knot");
  return make("adams", 4L * crossings - 16, 16);
}

Bound agol_thurston_bound(int twists) { return make("agol_thurston", 10L * (twists - 1), 10); }

Bound refined_bound(const TwistProfile& p) {
  const int a = p.g_i(4) != 0 ? 10 : (p.t_i(3) != 0 ? 7 : 6);
  return make("refined", weighted_twists(p) - a, a);
}

Bound refined_delta_bound(const TwistProfile& p, int delta) {
  const int a = p.g_i(4) != 0 ? 8 : (p.t_i(3) != 0 ? 6 : 4);
  return make("refined_delta", weighted_twists(p) - a - delta, a);
}

Bound volumish_bound(const HeadTail& h2) { return make("volumish", 10L * (h2.b + h2.beta - 1), 10); }

Bound coefficient_bound(const HeadTail& h2, const HeadTail& h3) {
  if (std::labs(h3.b) != std::labs(h2.b) || std::labs(h3.beta) != std::labs(h2.beta)) {
    throw ConventionError("second coefficients differ between n = 2 and n = 3 (b: " +
                          std::to_string(h2.b) + " vs " + std::to_string(h3.b) + ", beta: " +
                          std::to_string(h2.beta) + " vs " + std::to_string(h3.beta) + ")");
  }
  const long bsum = h2.b + h2.beta;
  const int a = bsum != (h2.c - h3.c) + (h2.gamma - h3.gamma) ? 10 : 4;
  return make("coefficient", 6 * ((h2.c + h2.gamma) - (h3.c + h3.gamma)) - 2 * bsum - a, a);
}

long twist_number_residual(const TwistProfile& p, const HeadTail& h2) {
  return h2.b + h2.beta - p.t;
}

std::array<long, 3> identity_residuals(const TwistProfile& p, const GraphStats& s,
                                     const HeadTail& h2, const HeadTail& h3) {
  const long g2 = p.g_i(2);
  return {
      twist_number_residual(p, h2),
      (h2.c + h2.gamma) - (h3.c + h3.gamma) - (p.t + g2),
      (h2.c + h3.c) + (h2.gamma + h3.gamma) - (h2.b * h2.b + h2.beta * h2.beta) -
          (g2 - 2L * (s.tau_W + s.tau_B)),
  };
}

void finalize(BoundsReport& r, std::optional<double> reference_volume) {
  r.best.reset();
  r.best_name.reset();
  for (const Bound* b : r.all()) {
    if (!b->applicable) continue;
    if (!r.best || b->value() < *r.best) {
      r.best = b->value();
      r.best_name = b->name;
    }
  }
  r.reference_volume = reference_volume;
  r.slack.reset();
  if (r.best && reference_volume) r.slack = *r.best - *reference_volume;
}

}  // namespace knotvol
