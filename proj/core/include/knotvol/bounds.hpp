#pragma once

#include <array>
#include <optional>
#include <string>

#include "knotvol/checkerboard.hpp"
#include "knotvol/jones.hpp"
#include "knotvol/twist.hpp"

namespace knotvol {

/// Clausen function Cl2(theta) for 0 < theta < 2*pi, from its zeta series.
double clausen2(double theta);
/// Lobachevsky function, Lambda(theta) = Cl2(2 theta) / 2.
double lobachevsky(double theta);
/// Volume of the regular ideal tetrahedron, 3 Lambda(pi/3), evaluated from the series.
double compute_v3();

/// compute_v3() frozen to double precision.
inline constexpr double kV3 = 1.0149416064096536;

/// An upper volume bound expressed as an integer multiple of v3.
struct Bound {
  std::string name;
  long multiple = 0;
  int a = 0;  // additive constant actually subtracted (0 when the bound has none)
  bool applicable = false;
  std::string reason;  // why the bound does not apply

  double value() const noexcept { return static_cast<double>(multiple) * kV3; }
};

/// (4c - 16) v3, excluding the figure-eight knot.
Bound adams_bound(int crossings, bool is_figure_eight);
/// 10 (t - 1) v3.
Bound agol_thurston_bound(int twists);
/// 10 g4 + 8 t3 + 6 t2 + 4 t1 - a, with a = 10 / 7 / 6.
Bound refined_bound(const TwistProfile& p);
/// The refined bound with a = 8 / 6 / 4 and the triangular-region count subtracted.
Bound refined_delta_bound(const TwistProfile& p, int delta);
/// 10 (b2 + beta2 - 1) v3.
Bound volumish_bound(const HeadTail& h2);
/// 6((c2+gamma2) - (c3+gamma3)) - 2(b2+beta2) - a, a = 10 unless
/// b2 + beta2 = (c2 - c3) + (gamma2 - gamma3), then 4.
/// Throws ConventionError if |b3| != |b2| or |beta3| != |beta2|.
Bound coefficient_bound(const HeadTail& h2, const HeadTail& h3);

/// Left minus right of  b2 + beta2 = t.
long twist_number_residual(const TwistProfile& p, const HeadTail& h2);
/// Left minus right of the three coefficient identities:
///   b2 + beta2 = t
///   (c2 + gamma2) - (c3 + gamma3) = t + g2
///   (c2 + c3) + (gamma2 + gamma3) - (b2^2 + beta2^2) = g2 - 2 (tau_W + tau_B)
std::array<long, 3> identity_residuals(const TwistProfile& p, const GraphStats& s,
                                     const HeadTail& h2, const HeadTail& h3);

struct BoundsReport {
  Bound adams;
  Bound agol_thurston;
  Bound refined;
  Bound refined_delta;
  Bound coefficient;  // not applicable when J(3) was not computed
  Bound volumish;
  std::optional<std::string> best_name;
  std::optional<double> best;
  std::optional<double> reference_volume;
  std::optional<double> slack;  // best - reference_volume

  std::array<const Bound*, 6> all() const {
    return {&adams, &agol_thurston, &refined, &refined_delta, &coefficient, &volumish};
  }
};

/// Fills best and slack from the six bounds and the optional reference volume.
void finalize(BoundsReport& r, std::optional<double> reference_volume);

}  // namespace knotvol
