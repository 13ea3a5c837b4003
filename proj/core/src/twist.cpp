#include "knotvol/twist.hpp"

#include <algorithm>
#include <set>

#include "knotvol/error.hpp"

namespace knotvol {

int TwistProfile::t_i(int i) const {
  auto it = exactly.find(i);
  return it == exactly.end() ? 0 : it->second;
}

int TwistProfile::g_i(int i) const {
  if (i <= 1) return t;
  auto it = at_least.find(i);
  return it == at_least.end() ? 0 : it->second;
}

int TwistProfile::crossing_count() const {
  int sum = 0;
  for (int len : lengths) sum += len;
  return sum;
}

std::vector<TwistRegion> detect_twists(const LinkDiagram& d) {
  return detect_twists(d, face_map(d));
}

std::vector<TwistRegion> detect_twists(const LinkDiagram& d, const FaceMap& fm) {
  if (!is_reduced(d, fm)) {
    throw PreconditionError("twist regions are undefined on a non-reduced diagram");
  }
  const std::size_t n = d.crossing_count();
  std::vector<std::set<int>> bigon_nbrs(n);
  for (const auto& f : fm.faces) {
    if (!f.is_bigon()) continue;
    const int a = f.boundary[0].crossing;
    const int b = f.boundary[1].crossing;
    if (a == b) continue;
    bigon_nbrs[a].insert(b);
    bigon_nbrs[b].insert(a);
  }

  std::vector<int> group(n, -1);
  std::vector<TwistRegion> regions;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (group[seed] >= 0) continue;
    const int id = static_cast<int>(regions.size());
    std::vector<int> members;
    std::vector<int> stack{static_cast<int>(seed)};
    group[seed] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y : bigon_nbrs[x]) {
        if (group[y] < 0) {
          group[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());

    // Lay the row out from one end; a closed ring of bigons starts anywhere.
    int start = members.front();
    for (int x : members) {
      if (bigon_nbrs[x].size() == 1) {
        start = x;
        break;
      }
    }
    TwistRegion region;
    std::set<int> placed;
    for (int x = start; x >= 0;) {
      region.crossings.push_back(x);
      placed.insert(x);
      int next = -1;
      for (int y : bigon_nbrs[x]) {
        if (!placed.count(y)) {
          next = y;
          break;
        }
      }
      x = next;
    }
    for (int x : members) {
      if (!placed.count(x)) region.crossings.push_back(x);
    }
    regions.push_back(std::move(region));
  }
  return regions;
}

TwistProfile twist_profile(std::span<const TwistRegion> regions) {
  std::vector<int> lengths;
  lengths.reserve(regions.size());
  for (const auto& r : regions) lengths.push_back(r.length());
  return twist_profile_from_lengths(std::move(lengths));
}

TwistProfile twist_profile_from_lengths(std::vector<int> lengths) {
  TwistProfile p;
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  p.lengths = std::move(lengths);
  p.t = static_cast<int>(p.lengths.size());
  for (int len : p.lengths) ++p.exactly[len];
  const int longest = p.lengths.empty() ? 0 : p.lengths.front();
  for (int i = 1; i <= longest; ++i) {
    p.at_least[i] = static_cast<int>(
        std::count_if(p.lengths.begin(), p.lengths.end(), [i](int len) { return len >= i; }));
  }
  return p;
}

// --- Augmentation ----------------------------------------------------------

namespace {

enum class CornerKind { residual, bigon, side, end };

struct CornerInfo {
  CornerKind kind = CornerKind::residual;
  int twist = -1;
};

}  // namespace

AugmentedDiagram augment(const LinkDiagram& d, std::span<const TwistRegion> regions) {
  return augment(d, face_map(d), regions);
}

AugmentedDiagram augment(const LinkDiagram& d, const FaceMap& fm,
                         std::span<const TwistRegion> regions) {
  const std::size_t n = d.crossing_count();
  std::vector<int> twist_of(n, -1);
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (int x : regions[r].crossings) twist_of[x] = static_cast<int>(r);
  }
  auto is_long = [&](int twist) { return twist >= 0 && regions[twist].length() >= 4; };

  AugmentedDiagram a;
  std::vector<std::array<CornerInfo, 4>> corners(n);
  for (std::size_t x = 0; x < n; ++x) {
    const int t = twist_of[x];
    if (!is_long(t)) {
      a.residual_crossings.push_back(static_cast<int>(x));
      continue;
    }
    std::array<bool, 4> bigon{};
    for (int s = 0; s < 4; ++s) {
      const Face& f = fm.faces[fm.corner_face[x][s]];
      bigon[s] = f.is_bigon() && twist_of[f.boundary[0].crossing] == t &&
                 twist_of[f.boundary[1].crossing] == t;
    }
    for (int s = 0; s < 4; ++s) {
      CornerKind kind = CornerKind::end;
      if (bigon[s]) {
        kind = CornerKind::bigon;
      } else if (bigon[(s + 1) & 3] || bigon[(s + 3) & 3]) {
        kind = CornerKind::side;
      }
      corners[x][s] = {kind, t};
    }
  }

  for (const Face& f : fm.faces) {
    const auto& b = f.boundary;
    const auto info = [&](std::size_t i) { return corners[b[i].crossing][b[i].slot]; };
    if (std::any_of(b.begin(), b.end(), [&](const FaceIncidence& c) {
          return corners[c.crossing][c.slot].kind == CornerKind::bigon;
        })) {
      ++a.deleted_bigons;
      continue;
    }
    // A side corner continues the group of the previous corner when both lie
    // along the same augmented twist.
    const std::size_t m = b.size();
    auto continues = [&](std::size_t i) {
      const CornerInfo cur = info(i);
      const CornerInfo prev = info((i + m - 1) % m);
      return cur.kind == CornerKind::side && prev.kind == CornerKind::side &&
             cur.twist == prev.twist;
    };
    std::size_t start = 0;
    while (start < m && continues(start)) ++start;

    AugmentedFace af{f.id, 0, 0, 0};
    if (start == m) {
      // The whole boundary runs along one twist.
      af.segments = 1;
      af.piercing_circles = 1;
      a.segments.push_back({f.id, b[m - 1].arc});
    } else {
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t i = (start + k) % m;
        const std::size_t next = (i + 1) % m;
        if (!continues(i)) {
          const CornerInfo c = info(i);
          if (c.kind == CornerKind::end) ++af.bounding_circles;
          if (c.kind == CornerKind::side) ++af.piercing_circles;
        }
        if (!continues(next)) {
          ++af.segments;
          a.segments.push_back({f.id, b[i].arc});
        }
      }
    }
    a.faces.push_back(af);
  }

  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (!is_long(static_cast<int>(r))) continue;
    CrossingCircle circle;
    circle.twist = static_cast<int>(r);
    circle.pierced_faces = {-1, -1};
    circle.end_faces = {-1, -1};
    const int first = regions[r].crossings.front();
    const int last = regions[r].crossings.back();
    for (int s = 0; s < 4; ++s) {
      const CornerInfo c = corners[first][s];
      if (c.kind == CornerKind::end) {
        circle.end_faces[0] = fm.corner_face[first][s];
        circle.encircled_arcs = {d.arc(first, s), d.arc(first, s + 1)};
      } else if (c.kind == CornerKind::side) {
        circle.pierced_faces[circle.pierced_faces[0] < 0 ? 0 : 1] = fm.corner_face[first][s];
      }
      if (corners[last][s].kind == CornerKind::end) {
        circle.end_faces[1] = fm.corner_face[last][s];
      }
    }
    a.circles.push_back(circle);
  }
  return a;
}

DeltaBreakdown classify_delta_regions(const AugmentedDiagram& a) {
  DeltaBreakdown out;
  for (const auto& f : a.faces) {
    if (f.segments == 3 && f.piercing_circles == 0) {
      ++out.three_segment;
    } else if (f.segments == 3) {
      out.pierced_three_segment.push_back(f.source_face);
    } else if (f.segments == 2 && f.bounding_circles <= 1 && f.piercing_circles == 1) {
      ++out.two_segment;
    }
  }
  return out;
}

int count_delta(const AugmentedDiagram& a) { return classify_delta_regions(a).total(); }

}  // namespace knotvol
