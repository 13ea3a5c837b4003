#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "knotvol/diagram.hpp"

namespace knotvol {

/// A maximal row of crossings joined by bigons, or a lone crossing next to no bigon.
struct TwistRegion {
  std::vector<int> crossings;  // consecutive entries share a bigon face
  int length() const noexcept { return static_cast<int>(crossings.size()); }
};

/// Twist statistics of a diagram: t(D), t_i(D) (exactly i crossings) and
/// g_i(D) (at least i crossings).
struct TwistProfile {
  std::vector<int> lengths;  // descending
  int t = 0;
  std::map<int, int> exactly;   // i -> t_i, only non-zero entries
  std::map<int, int> at_least;  // i -> g_i for 1 <= i <= longest twist

  int t_i(int i) const;
  int g_i(int i) const;
  int crossing_count() const;
};

/// Requires a reduced diagram; throws PreconditionError otherwise.
std::vector<TwistRegion> detect_twists(const LinkDiagram& d);
std::vector<TwistRegion> detect_twists(const LinkDiagram& d, const FaceMap& fm);

TwistProfile twist_profile(std::span<const TwistRegion> regions);
TwistProfile twist_profile_from_lengths(std::vector<int> lengths);

/// A crossing circle around a twist of at least four crossings.
struct CrossingCircle {
  int twist = -1;                          // index into the twist list
  std::array<int, 2> encircled_arcs{};     // the two strands entering the twist at one end
  std::array<int, 2> pierced_faces{};      // faces of D flanking the long sides
  std::array<int, 2> end_faces{};          // faces of D beyond the two ends
};

/// A boundary segment of an augmented face: one arc of D between two breaks.
struct Segment {
  int face = -1;
  int arc = 0;
};

/// A face of D_a with the counts used for triangular-region detection.
struct AugmentedFace {
  int source_face = -1;
  int segments = 0;
  int bounding_circles = 0;
  int piercing_circles = 0;
};

/// The combinatorial augmentation: long twists replaced by crossing circles.
struct AugmentedDiagram {
  std::vector<int> residual_crossings;  // crossings of twists with <= 3 crossings
  std::vector<CrossingCircle> circles;
  std::vector<Segment> segments;
  std::vector<AugmentedFace> faces;     // bigons inside augmented twists are dropped
  int deleted_bigons = 0;
};

AugmentedDiagram augment(const LinkDiagram& d, std::span<const TwistRegion> regions);
AugmentedDiagram augment(const LinkDiagram& d, const FaceMap& fm,
                         std::span<const TwistRegion> regions);

struct DeltaBreakdown {
  int three_segment = 0;  // three planar segments, no piercing circle
  int two_segment = 0;    // two planar segments, <= 1 bounding circle, one piercing circle
  /// Source faces with three segments that are also pierced; reported, never counted.
  std::vector<int> pierced_three_segment;
  int total() const noexcept { return three_segment + two_segment; }
};

DeltaBreakdown classify_delta_regions(const AugmentedDiagram& a);
int count_delta(const AugmentedDiagram& a);

}  // namespace knotvol
