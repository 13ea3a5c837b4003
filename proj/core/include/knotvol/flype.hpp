#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "knotvol/diagram.hpp"

namespace knotvol {

/// A flype that carries crossing `x` across a tangle so that it lands next to `y`.
/// The tangle is bounded by a curve through x and y that enters the faces at
/// corner `x_corner` of x and corner `y_corner` of y (the same face), and their
/// opposite corners (the same second face).
struct FlypeMove {
  int x;
  int x_corner;
  int y;
  int y_corner;
  std::vector<int> tangle;  // crossings carried over, sorted
};

/// Every flype available in a reduced diagram that moves a crossing into a
/// different twist region.
std::vector<FlypeMove> flype_moves(const LinkDiagram& d);

LinkDiagram apply_flype(const LinkDiagram& d, const FlypeMove& m);

/// True when no flype merges two twist regions, i.e. the twist number cannot
/// be lowered by flyping.
bool is_twist_reduced(const LinkDiagram& d);

/// Searches the flype class of a reduced alternating diagram for one with the
/// fewest twist regions. Gives up after `max_diagrams` distinct diagrams and
/// returns the best one seen.
LinkDiagram twist_reduce(const LinkDiagram& d, std::size_t max_diagrams = 5000);

}  // namespace knotvol
