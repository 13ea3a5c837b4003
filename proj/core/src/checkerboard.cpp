#include "knotvol/checkerboard.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "knotvol/error.hpp"

namespace knotvol {

const char* to_string(Color c) noexcept { return c == Color::black ? "black" : "white"; }

int ReducedGraph::total_multiplicity() const {
  int sum = 0;
  for (const auto& e : edges) sum += e.multiplicity;
  return sum;
}

int GraphStats::n_black(int i) const {
  auto it = n_B.find(i);
  return it == n_B.end() ? 0 : it->second;
}

int GraphStats::n_white(int i) const {
  auto it = n_W.find(i);
  return it == n_W.end() ? 0 : it->second;
}

CheckerboardPair build_graphs(const LinkDiagram& d) { return build_graphs(d, face_map(d)); }

CheckerboardPair build_graphs(const LinkDiagram& d, const FaceMap& fm) {
  if (!is_alternating(d)) {
    throw PreconditionError("checkerboard colouring convention needs an alternating diagram");
  }
  CheckerboardPair pair;
  pair.black.color = Color::black;
  pair.white.color = Color::white;
  std::vector<int> assigned(fm.faces.size(), -1);  // -1 unknown, else Color
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    for (int s = 0; s < 4; ++s) {
      const int c = (s % 2 == 0) ? static_cast<int>(Color::black) : static_cast<int>(Color::white);
      int& slot = assigned[fm.corner_face[x][s]];
      if (slot >= 0 && slot != c) {
        throw PreconditionError("face " + std::to_string(fm.corner_face[x][s]) +
                                " receives both colours");
      }
      slot = c;
    }
  }

  std::vector<int> vertex_of(fm.faces.size(), -1);
  pair.face_color.reserve(fm.faces.size());
  for (std::size_t f = 0; f < fm.faces.size(); ++f) {
    const Color c = static_cast<Color>(assigned[f]);
    pair.face_color.push_back(c);
    PlaneMultigraph& g = c == Color::black ? pair.black : pair.white;
    vertex_of[f] = static_cast<int>(g.vertex_faces.size());
    g.vertex_faces.push_back(static_cast<int>(f));
  }

  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    const auto& cf = fm.corner_face[x];
    for (auto [g, a, b] : {std::tuple{&pair.black, cf[0], cf[2]},
                           std::tuple{&pair.white, cf[1], cf[3]}}) {
      if (a == b) {
        throw PreconditionError("crossing " + std::to_string(x + 1) +
                                " gives a self-loop in the " + to_string(g->color) + " graph");
      }
      g->edges.push_back({vertex_of[a], vertex_of[b], static_cast<int>(x)});
    }
  }
  return pair;
}

ReducedGraph reduce_graph(const PlaneMultigraph& g) {
  std::map<std::pair<int, int>, int> merged;
  for (const auto& e : g.edges) ++merged[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  ReducedGraph r;
  r.source = g.color;
  r.vertex_count = g.vertex_count();
  for (const auto& [uv, m] : merged) r.edges.push_back({uv.first, uv.second, m});
  return r;
}

int triangle_count(const ReducedGraph& g) {
  std::vector<std::set<int>> adj(g.vertex_count);
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  int count = 0;
  for (int u = 0; u < static_cast<int>(g.vertex_count); ++u) {
    for (int v : adj[u]) {
      if (v <= u) continue;
      for (int w : adj[v]) {
        if (w > v && adj[u].count(w)) ++count;
      }
    }
  }
  return count;
}

namespace {

std::map<int, int> at_least_counts(const ReducedGraph& g) {
  int longest = 0;
  for (const auto& e : g.edges) longest = std::max(longest, e.multiplicity);
  std::map<int, int> out;
  for (int i = 1; i <= longest; ++i) {
    out[i] = static_cast<int>(std::count_if(g.edges.begin(), g.edges.end(),
                                            [i](const ReducedEdge& e) { return e.multiplicity >= i; }));
  }
  return out;
}

}  // namespace

GraphStats multiplicity_profile(const ReducedGraph& black, const ReducedGraph& white) {
  GraphStats s;
  s.tau_B = triangle_count(black);
  s.tau_W = triangle_count(white);
  s.n_B = at_least_counts(black);
  s.n_W = at_least_counts(white);
  return s;
}

std::vector<int> twist_identity_mismatches(const GraphStats& stats, const TwistProfile& profile) {
  int top = profile.lengths.empty() ? 0 : profile.lengths.front();
  if (!stats.n_B.empty()) top = std::max(top, stats.n_B.rbegin()->first);
  if (!stats.n_W.empty()) top = std::max(top, stats.n_W.rbegin()->first);
  std::vector<int> bad;
  for (int i = 2; i <= top; ++i) {
    if (stats.n_black(i) + stats.n_white(i) != profile.g_i(i)) bad.push_back(i);
  }
  return bad;
}

}  // namespace knotvol
