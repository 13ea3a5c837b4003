#include "knotvol/diagram.hpp"
#include "knotvol/twist.hpp"

namespace knotvol {

ValidationReport validate(const LinkDiagram& d) {
  ValidationReport r;
  r.is_connected = true;
  if (d.crossing_count() == 0) {
    r.is_alternating = r.is_reduced = r.is_prime = true;
    r.messages.push_back("crossingless diagram has no twist regions");
    return r;
  }

  r.is_alternating = is_alternating(d);
  if (!r.is_alternating) r.messages.push_back("over/under strands do not alternate");

  const FaceMap fm = face_map(d);
  r.is_reduced = is_reduced(d, fm);
  if (!r.is_reduced) {
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
      const auto& f = fm.corner_face[x];
      if (f[0] == f[2] || f[1] == f[3] || f[0] == f[1] || f[1] == f[2] || f[2] == f[3] ||
          f[3] == f[0]) {
        r.messages.push_back("crossing " + std::to_string(x + 1) + " is nugatory (a loop)");
      }
    }
  }

  r.is_prime = is_prime(d);
  if (!r.is_prime) r.messages.push_back("diagram has a two-edge cut (composite diagram)");

  if (r.is_reduced) {
    const std::size_t t = detect_twists(d, fm).size();
    r.passes_torus_gate = t >= 2;
    if (!r.passes_torus_gate) {
      r.messages.push_back("torus gate: single twist region (t(D) = 1), a (2,n) torus link");
    }
  } else {
    r.messages.push_back("torus gate: twist number undefined on a non-reduced diagram");
  }
  return r;
}

}  // namespace knotvol
