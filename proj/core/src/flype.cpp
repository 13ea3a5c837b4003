#include "knotvol/flype.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <string>

#include "knotvol/twist.hpp"

namespace knotvol {

namespace {

// Ports are crossing * 4 + position, positions counterclockwise. A port knows
// its partner across an arc and whether the strand enters the crossing there.
struct PortGraph {
  std::vector<int> partner;
  std::vector<char> incoming;
  std::vector<char> over_odd;  // per crossing: odd positions carry the over-strand
};

PortGraph ports_of(const LinkDiagram& d) {
  const int n = static_cast<int>(d.crossing_count());
  PortGraph g;
  g.partner.resize(4 * n);
  g.incoming.assign(4 * n, 0);
  g.over_odd.assign(n, 1);
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const Incidence e = d.other_end(c, s);
      g.partner[4 * c + s] = 4 * e.crossing + e.slot;
    }
    g.incoming[4 * c + kUnderIn] = 1;
    g.incoming[4 * c + d.over_in_slot(c)] = 1;
  }
  return g;
}

// Arcs are labelled consecutively along each component.
LinkDiagram diagram_of(const PortGraph& g) {
  const int ports = static_cast<int>(g.partner.size());
  std::vector<int> label(ports, 0);
  int next = 1;
  for (int start = 0; start < ports; ++start) {
    if (!g.incoming[start] || label[start]) continue;
    int in = start;
    do {
      const int out = (in & ~3) + ((in + 2) & 3);
      label[out] = label[g.partner[out]] = next++;
      in = g.partner[out];
    } while (in != start);
  }
  std::vector<std::array<int, 4>> tuples;
  for (int c = 0; c < ports / 4; ++c) {
    int u = g.over_odd[c] ? 0 : 1;
    if (!g.incoming[4 * c + u]) u += 2;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) t[k] = label[4 * c + ((u + k) & 3)];
    tuples.push_back(t);
  }
  return LinkDiagram::from_crossings(std::move(tuples));
}

int port(int c, int pos) { return 4 * c + (pos & 3); }

// Crossings reachable from the tangle side of x and y without passing through
// them; empty when the four boundary ports do not bound a tangle.
std::vector<int> tangle_between(const PortGraph& g, int x, int p, int y, int q) {
  const std::array<int, 4> boundary{port(x, p), port(x, p + 1), port(y, q), port(y, q + 1)};
  std::vector<int> seeds;
  for (int b : boundary) {
    const int c = g.partner[b] / 4;
    if (c == x || c == y) return {};
    seeds.push_back(c);
  }
  std::set<int> seen(seeds.begin(), seeds.end());
  std::vector<int> stack(seen.begin(), seen.end());
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      const int far = g.partner[4 * c + s];
      const int fc = far / 4;
      if (fc == x || fc == y) {
        if (std::find(boundary.begin(), boundary.end(), far) == boundary.end()) return {};
        continue;
      }
      if (seen.insert(fc).second) stack.push_back(fc);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string key_of(const LinkDiagram& d) {
  // Labels run consecutively along a knot, so rotating them gives the same diagram.
  const int arcs = d.arc_count();
  const int shifts = d.is_knot() ? arcs : 1;
  std::string best;
  for (int r = 0; r < shifts; ++r) {
    std::vector<std::array<int, 4>> t;
    for (const auto& c : d.crossings()) {
      std::array<int, 4> a{};
      for (int k = 0; k < 4; ++k) a[k] = (c.arcs[k] - 1 + r) % arcs;
      t.push_back(a);
    }
    std::sort(t.begin(), t.end());
    std::string s;
    for (const auto& a : t) {
      for (int v : a) s += static_cast<char>(v);
    }
    if (r == 0 || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<FlypeMove> flype_moves(const LinkDiagram& d) {
  std::vector<FlypeMove> moves;
  const int n = static_cast<int>(d.crossing_count());
  if (n < 3) return moves;
  const FaceMap fm = face_map(d);
  if (!is_reduced(d, fm)) return moves;
  const auto regions = detect_twists(d, fm);
  std::vector<int> region_of(n, -1);
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (int c : regions[r].crossings) region_of[c] = static_cast<int>(r);
  }
  const PortGraph g = ports_of(d);
  for (int x = 0; x < n; ++x) {
    for (int fx = 0; fx < 4; ++fx) {
      const int f = fm.corner_face[x][fx];
      const int h = fm.corner_face[x][(fx + 2) & 3];
      for (int y = 0; y < n; ++y) {
        if (y == x || region_of[y] == region_of[x]) continue;
        for (int fy = 0; fy < 4; ++fy) {
          if (fm.corner_face[y][fy] != f || fm.corner_face[y][(fy + 2) & 3] != h) continue;
          auto tangle = tangle_between(g, x, fx + 3, y, fy + 1);
          if (tangle.empty()) continue;
          moves.push_back({x, fx, y, fy, std::move(tangle)});
        }
      }
    }
  }
  return moves;
}

LinkDiagram apply_flype(const LinkDiagram& d, const FlypeMove& m) {
  PortGraph g = ports_of(d);
  const int p = m.x_corner + 3;
  const int q = m.y_corner + 1;
  const int ln = g.partner[port(m.x, p + 2)];
  const int ls = g.partner[port(m.x, p + 3)];

  // Turning the tangle over reflects its rotation order and swaps over with under.
  std::vector<char> in_tangle(d.crossing_count(), 0);
  for (int c : m.tangle) in_tangle[c] = 1;
  auto moved = [&](int pt) { return in_tangle[pt / 4] ? (pt & ~3) + ((4 - (pt & 3)) & 3) : pt; };
  PortGraph f = g;
  for (std::size_t pt = 0; pt < g.partner.size(); ++pt) {
    const int to = moved(static_cast<int>(pt));
    f.partner[to] = moved(g.partner[pt]);
    f.incoming[to] = g.incoming[pt];
  }
  for (int c : m.tangle) f.over_odd[c] = !g.over_odd[c];

  const int tnw = moved(g.partner[port(m.x, p + 1)]);
  const int tsw = moved(g.partner[port(m.x, p)]);
  const int tne = moved(g.partner[port(m.y, q)]);
  const int tse = moved(g.partner[port(m.y, q + 1)]);
  auto join = [&](int a, int b) {
    f.partner[a] = b;
    f.partner[b] = a;
  };
  join(ln, tsw);
  join(ls, tnw);
  join(port(m.x, p + 2), tse);
  join(port(m.x, p + 3), tne);
  join(port(m.x, p + 1), port(m.y, q));
  join(port(m.x, p), port(m.y, q + 1));
  for (int k = 0; k < 4; ++k) {
    const int pt = port(m.x, p + k);
    f.incoming[pt] = !f.incoming[f.partner[pt]];
  }
  return diagram_of(f);
}

bool is_twist_reduced(const LinkDiagram& d) { return flype_moves(d).empty(); }

LinkDiagram twist_reduce(const LinkDiagram& d, std::size_t max_diagrams) {
  if (d.crossing_count() < 3) return d;
  const FaceMap fm = face_map(d);
  if (!is_reduced(d, fm)) return d;

  auto twist_number = [](const LinkDiagram& e) { return twist_profile(detect_twists(e)).t; };
  LinkDiagram best = d;
  int best_t = twist_number(d);
  std::set<std::string> seen{key_of(d)};
  std::deque<LinkDiagram> queue{d};
  while (!queue.empty() && seen.size() < max_diagrams) {
    const LinkDiagram cur = queue.front();
    queue.pop_front();
    const auto moves = flype_moves(cur);
    if (moves.empty()) return cur;
    for (const auto& m : moves) {
      LinkDiagram next = apply_flype(cur, m);
      if (!seen.insert(key_of(next)).second) continue;
      const int t = twist_number(next);
      if (t < best_t) {
        best = next;
        best_t = t;
      }
      queue.push_back(std::move(next));
    }
  }
  return best;
}

}  // namespace knotvol
