#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "knotvol/diagram.hpp"
#include "knotvol/laurent.hpp"

namespace knotvol {

/// Unoriented 4-valent plane graph with crossing information: each crossing lists
/// its four edge ids counterclockwise starting from an under-strand end. This is
/// all the Kauffman bracket needs, and it is closed under cabling.
struct PlanarGraph {
  std::vector<std::array<int, 4>> crossings;
  int edge_count = 0;
  int free_loops = 0;  // closed components without crossings
};

PlanarGraph planar_graph(const LinkDiagram& d);

/// Blackboard-framed parallel cable: component i is replaced by strands[i]
/// parallel copies (0 deletes it).
PlanarGraph cable(const LinkDiagram& d, std::span<const int> strands);

struct BracketOptions {
  std::size_t max_crossings = 400;
  /// Largest number of open edges allowed while sweeping the diagram.
  std::size_t max_frontier = 30;
};

/// Greedy sweep order: each step takes the crossing sharing the most edges with
/// the current frontier. Tries every starting crossing and keeps the narrowest.
std::vector<int> contraction_order(const PlanarGraph& g);
std::size_t frontier_width(const PlanarGraph& g, std::span<const int> order);

/// -A^2 - A^-2.
const LaurentPolynomial& loop_value();

/// State sum with every closed loop weighted by loop_value() (the empty
/// diagram is 1). Throws ResourceError when a budget is exceeded.
LaurentPolynomial bracket_unnormalized(const PlanarGraph& g, const BracketOptions& options = {});

/// The Kauffman bracket normalised so that the crossingless unknot is 1.
LaurentPolynomial kauffman_bracket(const LinkDiagram& d, const BracketOptions& options = {});

}  // namespace knotvol
