#pragma once

#include <map>
#include <vector>

#include "knotvol/diagram.hpp"
#include "knotvol/twist.hpp"

namespace knotvol {

enum class Color { black, white };

const char* to_string(Color c) noexcept;

struct GraphEdge {
  int u;
  int v;
  int crossing;
};

/// A checkerboard (Tait) graph: one vertex per face of one color, one edge per crossing.
struct PlaneMultigraph {
  Color color = Color::black;
  std::vector<int> vertex_faces;  // vertex -> face id of D
  std::vector<GraphEdge> edges;
  std::size_t vertex_count() const noexcept { return vertex_faces.size(); }
};

/// Black faces sit clockwise from each over-strand, white faces counterclockwise.
/// With slots numbered counterclockwise from the incoming under-strand, the black
/// corners of every crossing are (0,1) and (2,3).
struct CheckerboardPair {
  PlaneMultigraph black;
  PlaneMultigraph white;
  std::vector<Color> face_color;  // face id -> color
};

struct ReducedEdge {
  int u;
  int v;
  int multiplicity;
};

/// A checkerboard graph with parallel edges merged; the multiplicity records how many.
struct ReducedGraph {
  Color source = Color::black;
  std::size_t vertex_count = 0;
  std::vector<ReducedEdge> edges;  // u < v, sorted
  int total_multiplicity() const;
};

struct GraphStats {
  int tau_B = 0;
  int tau_W = 0;
  std::map<int, int> n_B;  // i -> edges of multiplicity >= i, for 1 <= i <= max
  std::map<int, int> n_W;

  int n_black(int i) const;
  int n_white(int i) const;
};

/// Requires an alternating diagram (PreconditionError otherwise) without self-loops.
CheckerboardPair build_graphs(const LinkDiagram& d);
CheckerboardPair build_graphs(const LinkDiagram& d, const FaceMap& fm);
ReducedGraph reduce_graph(const PlaneMultigraph& g);
int triangle_count(const ReducedGraph& g);
GraphStats multiplicity_profile(const ReducedGraph& black, const ReducedGraph& white);

/// The values i >= 2 at which n_B(i) + n_W(i) != g_i(D). Empty on twist-reduced diagrams.
std::vector<int> twist_identity_mismatches(const GraphStats& stats, const TwistProfile& profile);

}  // namespace knotvol
