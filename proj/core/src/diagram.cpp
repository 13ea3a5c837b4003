#include "knotvol/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>

#include "knotvol/error.hpp"

namespace knotvol {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// --- PD text scanner -------------------------------------------------------

struct Token {
  enum Kind { kX, kPD, kInt, kOpen, kClose, kComma, kEnd } kind;
  long value = 0;
  int line = 1;
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token tok{Token::kEnd, 0, line_};
    if (pos_ >= text_.size()) return tok;
    const char c = text_[pos_];
    if (c == '[') return ++pos_, Token{Token::kOpen, 0, line_};
    if (c == ']') return ++pos_, Token{Token::kClose, 0, line_};
    if (c == ',') return ++pos_, Token{Token::kComma, 0, line_};
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      std::size_t start = pos_++;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      if (digits == "-" || digits == "+") throw ParseError(line_, "stray '" + digits + "'");
      if (digits.size() > 10) throw ParseError(line_, "arc label out of range: " + digits);
      tok.kind = Token::kInt;
      tok.value = std::stol(digits);
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "X") return Token{Token::kX, 0, line_};
      if (word == "PD") return Token{Token::kPD, 0, line_};
      throw ParseError(line_, "unexpected token '" + std::string(word) + "'");
    }
    throw ParseError(line_, std::string("unexpected character '") + c + "'");
  }

 private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

class PdParser {
 public:
  explicit PdParser(std::string_view text) : scanner_(text) { advance(); }

  std::vector<std::array<int, 4>> parse() {
    std::vector<std::array<int, 4>> out;
    if (tok_.kind == Token::kEnd) throw ParseError(0, "empty PD input");
    if (tok_.kind == Token::kPD) {
      advance();
      expect(Token::kOpen, "'[' after PD");
      while (tok_.kind != Token::kClose) {
        if (!out.empty()) expect(Token::kComma, "',' between crossings");
        out.push_back(crossing());
      }
      advance();
      if (tok_.kind != Token::kEnd) throw ParseError(tok_.line, "trailing input after PD[...]");
    } else {
      while (tok_.kind != Token::kEnd) {
        if (tok_.kind == Token::kComma) {
          advance();
          continue;
        }
        out.push_back(crossing());
      }
    }
    if (out.empty()) throw ParseError(0, "no crossings in PD input");
    return out;
  }

 private:
  void advance() { tok_ = scanner_.next(); }

  void expect(Token::Kind kind, const char* what) {
    if (tok_.kind != kind) throw ParseError(tok_.line, std::string("expected ") + what);
    advance();
  }

  int label() {
    if (tok_.kind != Token::kInt) throw ParseError(tok_.line, "expected an arc label");
    if (tok_.value <= 0) {
      throw ParseError(tok_.line, "arc labels must be positive, got " + std::to_string(tok_.value));
    }
    const int v = static_cast<int>(tok_.value);
    advance();
    return v;
  }

  std::array<int, 4> crossing() {
    const int line = tok_.line;
    expect(Token::kX, "'X'");
    std::array<int, 4> arcs{};
    if (tok_.kind == Token::kOpen) {
      advance();
      for (int i = 0; i < 4; ++i) {
        if (i > 0) expect(Token::kComma, "',' between arc labels");
        arcs[i] = label();
      }
      expect(Token::kClose, "']' closing the crossing");
    } else {
      for (int i = 0; i < 4; ++i) {
        if (i > 0 && tok_.kind == Token::kComma) advance();
        if (tok_.kind != Token::kInt || tok_.line != line) {
          throw ParseError(tok_.line, "crossing needs four arc labels");
        }
        arcs[i] = label();
      }
    }
    return arcs;
  }

  Scanner scanner_;
  Token tok_{};
};

}  // namespace

// --- LinkDiagram -----------------------------------------------------------

LinkDiagram LinkDiagram::from_crossings(std::vector<std::array<int, 4>> tuples) {
  if (tuples.empty()) throw StructuralError("a PD code needs at least one crossing");

  std::map<int, std::vector<Incidence>> occurrences;
  for (std::size_t x = 0; x < tuples.size(); ++x) {
    for (int s = 0; s < 4; ++s) {
      if (tuples[x][s] <= 0) throw StructuralError("arc labels must be positive");
      occurrences[tuples[x][s]].push_back({static_cast<int>(x), s});
    }
  }
  for (const auto& [label, where] : occurrences) {
    if (where.size() != 2) {
      throw StructuralError("arc " + std::to_string(label) + " occurs " +
                            std::to_string(where.size()) + " times (expected 2)");
    }
  }

  LinkDiagram d;
  std::map<int, int> relabel;
  for (const auto& [label, where] : occurrences) {
    const int fresh = static_cast<int>(relabel.size()) + 1;
    relabel[label] = fresh;
    d.arc_ends_.push_back({where[0], where[1]});
  }
  d.crossings_.reserve(tuples.size());
  for (const auto& t : tuples) {
    Crossing c{};
    for (int s = 0; s < 4; ++s) c.arcs[s] = relabel[t[s]];
    d.crossings_.push_back(c);
  }

  DisjointSets sets(d.crossings_.size());
  std::size_t pieces = d.crossings_.size();
  for (const auto& ends : d.arc_ends_) {
    if (sets.unite(ends[0].crossing, ends[1].crossing)) --pieces;
  }
  if (pieces != 1) {
    throw ConnectivityError("diagram is disconnected (" + std::to_string(pieces) + " pieces)");
  }

  d.derive_orientation();
  const std::size_t face_count = face_map(d).faces.size();
  if (face_count != d.crossings_.size() + 2) {
    throw StructuralError("rotation system is not planar: " + std::to_string(face_count) +
                          " faces for " + std::to_string(d.crossings_.size()) + " crossings");
  }
  return d;
}

LinkDiagram LinkDiagram::unknot() {
  LinkDiagram d;
  d.component_count_ = 1;
  d.passages_.emplace_back();
  return d;
}

Incidence LinkDiagram::other_end(int crossing, int slot) const {
  slot &= 3;
  const auto& ends = arc_ends_[crossings_[crossing].arcs[slot] - 1];
  return ends[0] == Incidence{crossing, slot} ? ends[1] : ends[0];
}

void LinkDiagram::derive_orientation() {
  const std::size_t n = crossings_.size();
  over_in_.assign(n, 0);
  arc_component_.assign(arc_ends_.size(), -1);
  std::vector<std::array<bool, 2>> seen(n, {false, false});  // [under, over]

  auto trace = [&](int x0, int in0) {
    const int comp = static_cast<int>(passages_.size());
    passages_.emplace_back();
    int x = x0;
    int in = in0;
    for (;;) {
      const int strand = is_under_slot(in) ? 0 : 1;
      if (seen[x][strand]) {
        throw StructuralError("strand through crossing " + std::to_string(x + 1) +
                              " is traversed twice");
      }
      seen[x][strand] = true;
      if (!is_under_slot(in)) {
        if (over_in_[x] != 0 && over_in_[x] != in) {
          throw StructuralError("inconsistent over-strand orientation at crossing " +
                                std::to_string(x + 1));
        }
        over_in_[x] = in;
      }
      const int out = (in + 2) & 3;
      passages_[comp].push_back({x, in, out});
      arc_component_[crossings_[x].arcs[out] - 1] = comp;
      const Incidence next = other_end(x, out);
      x = next.crossing;
      in = next.slot;
      if (is_under_slot(in) && in != kUnderIn) {
        throw StructuralError("under-strand at crossing " + std::to_string(x + 1) +
                              " runs against the PD convention");
      }
      if (x == x0 && in == in0) break;
    }
  };

  for (std::size_t x = 0; x < n; ++x) {
    if (!seen[x][0]) trace(static_cast<int>(x), kUnderIn);
  }
  // Components that only pass over: orient by arc numbering.
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x][1]) continue;
    const auto& a = crossings_[x].arcs;
    trace(static_cast<int>(x), a[1] == a[3] + 1 ? 3 : 1);
  }
  component_count_ = static_cast<int>(passages_.size());
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (std::size_t x = 0; x < crossings_.size(); ++x) w += sign(static_cast<int>(x));
  return w;
}

int LinkDiagram::self_writhe(int component) const {
  int w = 0;
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    const int xi = static_cast<int>(x);
    if (under_component(xi) == component && over_component(xi) == component) w += sign(xi);
  }
  return w;
}

LinkDiagram LinkDiagram::mirror() const {
  if (crossings_.empty()) return *this;
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(crossings_.size());
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    const int start = over_in_[x];
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) t[k] = crossings_[x].arcs[(start + k) & 3];
    tuples.push_back(t);
  }
  return from_crossings(std::move(tuples));
}

LinkDiagram parse_pd(std::string_view text) {
  return LinkDiagram::from_crossings(PdParser(text).parse());
}

std::string serialize_pd(const LinkDiagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    out += "X";
    for (int a : c.arcs) out += " " + std::to_string(a);
    out += "\n";
  }
  return out;
}

std::string serialize_pd_compact(const LinkDiagram& d) {
  std::string out = "PD[";
  for (std::size_t x = 0; x < d.crossings().size(); ++x) {
    const auto& a = d.crossings()[x].arcs;
    if (x != 0) out += ",";
    out += "X[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
           std::to_string(a[2]) + "," + std::to_string(a[3]) + "]";
  }
  return out + "]";
}

// --- Faces -----------------------------------------------------------------

FaceMap face_map(const LinkDiagram& d) {
  FaceMap fm;
  const std::size_t n = d.crossing_count();
  fm.corner_face.assign(n, {-1, -1, -1, -1});
  for (std::size_t x0 = 0; x0 < n; ++x0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (fm.corner_face[x0][s0] >= 0) continue;
      Face face{static_cast<int>(fm.faces.size()), {}};
      int x = static_cast<int>(x0);
      int s = s0;
      while (fm.corner_face[x][s] < 0) {
        fm.corner_face[x][s] = face.id;
        face.boundary.push_back({x, s, d.arc(x, s + 1)});
        const Incidence next = d.other_end(x, s + 1);
        x = next.crossing;
        s = next.slot;
      }
      fm.faces.push_back(std::move(face));
    }
  }
  return fm;
}

std::vector<Face> faces(const LinkDiagram& d) { return face_map(d).faces; }

// --- Validation predicates -------------------------------------------------

bool is_alternating(const LinkDiagram& d) {
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& p = d.component_passages(c);
    if (p.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].over() == p[(i + 1) % p.size()].over()) return false;
    }
  }
  return true;
}

bool is_reduced(const LinkDiagram& d, const FaceMap& fm) {
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    auto f = fm.corner_face[x];
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) return false;
  }
  return true;
}

bool is_prime(const LinkDiagram& d) {
  const int arcs = d.arc_count();
  const std::size_t n = d.crossing_count();
  for (int a = 1; a <= arcs; ++a) {
    for (int b = a + 1; b <= arcs; ++b) {
      DisjointSets sets(n);
      std::size_t pieces = n;
      for (int e = 1; e <= arcs; ++e) {
        if (e == a || e == b) continue;
        const auto& ends = d.arc_ends(e);
        if (sets.unite(ends[0].crossing, ends[1].crossing)) --pieces;
      }
      if (pieces > 1) return false;
    }
  }
  return true;
}

std::string ValidationReport::first_failure() const {
  if (!is_connected) return "connected";
  if (!is_alternating) return "alternating";
  if (!is_reduced) return "reduced";
  if (!is_prime) return "prime";
  if (!passes_torus_gate) return "torus gate";
  return {};
}

}  // namespace knotvol
