#pragma once

// Kauffman bracket by enumerating all 2^c smoothings. Exponential; small diagrams only.

#include <numeric>
#include <vector>

#include "knotvol/diagram.hpp"
#include "knotvol/laurent.hpp"

namespace oracle {

inline int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

/// Normalised so the crossingless unknot is 1.
inline knotvol::LaurentPolynomial brute_force_bracket(const knotvol::LinkDiagram& d) {
  using knotvol::LaurentPolynomial;
  using knotvol::Variable;
  const int c = static_cast<int>(d.crossing_count());
  const LaurentPolynomial delta = LaurentPolynomial::from_terms({{2, -1}, {-2, -1}}, Variable::A);
  if (c == 0) return LaurentPolynomial::constant(1, Variable::A);

  LaurentPolynomial total(Variable::A);
  for (unsigned long state = 0; state < (1ul << c); ++state) {
    std::vector<int> parent(d.arc_count() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    int a_count = 0;
    for (int x = 0; x < c; ++x) {
      const auto& arcs = d.crossings()[x].arcs;
      const bool a_smoothing = (state >> x) & 1ul;
      // A joins the arcs in slots 0-1 and 2-3; B joins 1-2 and 3-0.
      const int shift = a_smoothing ? 0 : 1;
      for (int k = 0; k < 4; k += 2) {
        const int u = find_root(parent, arcs[(k + shift) % 4]);
        const int v = find_root(parent, arcs[(k + shift + 1) % 4]);
        parent[u] = v;
      }
      a_count += a_smoothing;
    }
    int loops = 0;
    for (int arc = 1; arc <= d.arc_count(); ++arc) loops += find_root(parent, arc) == arc;
    LaurentPolynomial term = LaurentPolynomial::monomial(1, a_count - (c - a_count), Variable::A);
    for (int i = 1; i < loops; ++i) term *= delta;
    total += term;
  }
  return total;
}

}  // namespace oracle
