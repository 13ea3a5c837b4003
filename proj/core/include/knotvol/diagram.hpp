#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace knotvol {

/// Slot positions around a crossing, counterclockwise. Slot 0 is the incoming
/// under-strand, slot 2 the outgoing under-strand; slots 1 and 3 carry the over-strand.
inline constexpr int kUnderIn = 0;
inline constexpr int kUnderOut = 2;

inline constexpr bool is_under_slot(int slot) noexcept { return slot % 2 == 0; }

struct Crossing {
  std::array<int, 4> arcs;  // labels 1..arc_count, counterclockwise from the incoming under-strand
  bool operator==(const Crossing&) const = default;
};

struct Incidence {
  int crossing;
  int slot;
  bool operator==(const Incidence&) const = default;
};

/// One pass of a component through a crossing, in orientation order.
struct Passage {
  int crossing;
  int in_slot;
  int out_slot;
  bool over() const noexcept { return !is_under_slot(in_slot); }
};

/// A link diagram given by its PD code, with orientation, components and
/// crossing signs derived from the rotation system. Immutable after construction.
class LinkDiagram {
 public:
  /// Validates the arc structure and connectivity; relabels arcs to 1..arc_count
  /// preserving the order of the input labels.
  static LinkDiagram from_crossings(std::vector<std::array<int, 4>> tuples);
  /// The crossingless unknot. Has one component and no crossings or faces.
  static LinkDiagram unknot();

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  int arc_count() const noexcept { return static_cast<int>(arc_ends_.size()); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

  int arc(int crossing, int slot) const { return crossings_[crossing].arcs[slot & 3]; }
  const std::array<Incidence, 2>& arc_ends(int arc) const { return arc_ends_[arc - 1]; }
  /// The far end of the arc leaving `crossing` at `slot`.
  Incidence other_end(int crossing, int slot) const;

  /// Components with crossings come first, each oriented by the PD convention;
  /// crossingless components (only in unknot()) are counted but have no passages.
  int component_count() const noexcept { return component_count_; }
  int component_of_arc(int arc) const { return arc_component_[arc - 1]; }
  const std::vector<Passage>& component_passages(int component) const {
    return passages_[component];
  }
  bool is_knot() const noexcept { return component_count_ == 1; }

  /// The slot where the over-strand enters (1 or 3).
  int over_in_slot(int crossing) const { return over_in_[crossing]; }
  /// +1 for a right-handed crossing, -1 otherwise.
  int sign(int crossing) const { return over_in_[crossing] == 3 ? +1 : -1; }
  int writhe() const;
  /// Writhe counted over crossings where both strands belong to `component`.
  int self_writhe(int component) const;
  /// Components carrying the under- and over-strand at a crossing.
  int under_component(int crossing) const { return component_of_arc(arc(crossing, 0)); }
  int over_component(int crossing) const { return component_of_arc(arc(crossing, 1)); }

  /// Crossing changes at every crossing (the mirror image).
  LinkDiagram mirror() const;

  bool operator==(const LinkDiagram& rhs) const { return crossings_ == rhs.crossings_; }

 private:
  LinkDiagram() = default;
  void derive_orientation();

  std::vector<Crossing> crossings_;
  std::vector<std::array<Incidence, 2>> arc_ends_;
  std::vector<int> arc_component_;
  std::vector<int> over_in_;
  std::vector<std::vector<Passage>> passages_;
  int component_count_ = 0;
};

/// Accepts `X a b c d` per line or `PD[X[a,b,c,d],...]`; `#` starts a comment.
LinkDiagram parse_pd(std::string_view text);
/// One `X a b c d` line per crossing.
std::string serialize_pd(const LinkDiagram& d);
/// The single-line `PD[X[a,b,c,d],...]` form.
std::string serialize_pd_compact(const LinkDiagram& d);

/// A corner of a crossing: the wedge between `slot` and `slot + 1` (counterclockwise).
struct FaceIncidence {
  int crossing;
  int slot;
  int arc;  // the arc leaving the corner at slot + 1, bounding the face
};

struct Face {
  int id;
  std::vector<FaceIncidence> boundary;  // cyclic order
  int degree() const noexcept { return static_cast<int>(boundary.size()); }
  bool is_bigon() const noexcept { return boundary.size() == 2; }
};

struct FaceMap {
  std::vector<Face> faces;
  std::vector<std::array<int, 4>> corner_face;  // [crossing][slot] -> face id
};

FaceMap face_map(const LinkDiagram& d);
std::vector<Face> faces(const LinkDiagram& d);

struct ValidationReport {
  bool is_alternating = false;
  bool is_reduced = false;
  bool is_connected = false;
  bool is_prime = false;
  bool passes_torus_gate = false;
  std::vector<std::string> messages;

  bool ok() const noexcept {
    return is_alternating && is_reduced && is_connected && is_prime && passes_torus_gate;
  }
  /// Name of the first failing gate, or an empty string.
  std::string first_failure() const;
};

ValidationReport validate(const LinkDiagram& d);

bool is_alternating(const LinkDiagram& d);
bool is_reduced(const LinkDiagram& d, const FaceMap& fm);
bool is_prime(const LinkDiagram& d);

}  // namespace knotvol
