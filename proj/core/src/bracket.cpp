#include "knotvol/bracket.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "knotvol/error.hpp"

namespace knotvol {

PlanarGraph planar_graph(const LinkDiagram& d) {
  PlanarGraph g;
  if (d.crossing_count() == 0) {
    g.free_loops = d.component_count();
    return g;
  }
  g.edge_count = d.arc_count();
  g.crossings.reserve(d.crossing_count());
  for (const auto& c : d.crossings()) {
    g.crossings.push_back({c.arcs[0] - 1, c.arcs[1] - 1, c.arcs[2] - 1, c.arcs[3] - 1});
  }
  return g;
}

PlanarGraph cable(const LinkDiagram& d, std::span<const int> strands) {
  if (strands.size() != static_cast<std::size_t>(d.component_count())) {
    throw std::invalid_argument("one strand count per component is required");
  }
  PlanarGraph g;
  if (d.crossing_count() == 0) {
    for (int s : strands) g.free_loops += s;
    return g;
  }

  const int n = static_cast<int>(d.crossing_count());
  // Cable ends: at crossing x, slot p, the k-th parallel strand counterclockwise.
  auto width = [&](int x, int p) { return strands[d.component_of_arc(d.arc(x, p))]; };
  std::vector<std::array<int, 4>> base(n);
  int end_count = 0;
  for (int x = 0; x < n; ++x) {
    for (int p = 0; p < 4; ++p) {
      base[x][p] = end_count;
      end_count += width(x, p);
    }
  }
  auto end_id = [&](int x, int p, int k) { return base[x][p] + k; };

  std::vector<int> ext(end_count, -1);
  for (int a = 1; a <= d.arc_count(); ++a) {
    const auto& e = d.arc_ends(a);
    const int w = strands[d.component_of_arc(a)];
    for (int k = 0; k < w; ++k) {
      const int lhs = end_id(e[0].crossing, e[0].slot, k);
      const int rhs = end_id(e[1].crossing, e[1].slot, w - 1 - k);
      ext[lhs] = rhs;
      ext[rhs] = lhs;
    }
  }

  // inner[end] >= 0: port code (crossing * 4 + slot); < 0: pass-through to end -(v + 1).
  std::vector<int> inner(end_count, std::numeric_limits<int>::min());
  std::vector<int> port_end;
  auto new_crossing = [&]() {
    g.crossings.push_back({-1, -1, -1, -1});
    port_end.insert(port_end.end(), 4, -1);
    return static_cast<int>(g.crossings.size()) - 1;
  };
  auto attach = [&](int c, int slot, int end) {
    inner[end] = c * 4 + slot;
    port_end[c * 4 + slot] = end;
  };

  for (int x = 0; x < n; ++x) {
    const int nu = width(x, 0);
    const int no = width(x, 1);
    if (nu == 0 && no == 0) continue;
    if (nu == 0) {
      for (int h = 0; h < no; ++h) {
        const int a = end_id(x, 1, h);
        const int b = end_id(x, 3, no - 1 - h);
        inner[a] = -(b + 1);
        inner[b] = -(a + 1);
      }
      continue;
    }
    if (no == 0) {
      for (int v = 0; v < nu; ++v) {
        const int a = end_id(x, 0, v);
        const int b = end_id(x, 2, nu - 1 - v);
        inner[a] = -(b + 1);
        inner[b] = -(a + 1);
      }
      continue;
    }
    // nu vertical under-lines (west to east) cross no horizontal over-lines (south to north).
    std::vector<int> grid(static_cast<std::size_t>(nu * no));
    for (auto& c : grid) c = new_crossing();
    auto at = [&](int v, int h) { return grid[static_cast<std::size_t>(v * no + h)]; };
    for (int v = 0; v < nu; ++v) {
      for (int h = 0; h < no; ++h) {
        const int c = at(v, h);
        if (h == 0) attach(c, 0, end_id(x, 0, v));
        if (h == no - 1) attach(c, 2, end_id(x, 2, nu - 1 - v));
        if (v == nu - 1) attach(c, 1, end_id(x, 1, h));
        if (v == 0) attach(c, 3, end_id(x, 3, no - 1 - h));
        if (h + 1 < no) {
          const int e = g.edge_count++;
          g.crossings[c][2] = e;
          g.crossings[at(v, h + 1)][0] = e;
        }
        if (v + 1 < nu) {
          const int e = g.edge_count++;
          g.crossings[c][1] = e;
          g.crossings[at(v + 1, h)][3] = e;
        }
      }
    }
  }

  std::vector<bool> visited(end_count, false);
  for (std::size_t port = 0; port < port_end.size(); ++port) {
    const int c = static_cast<int>(port / 4);
    const int slot = static_cast<int>(port % 4);
    if (g.crossings[c][slot] >= 0) continue;
    int cur = port_end[port];
    for (;;) {
      visited[cur] = true;
      const int far = ext[cur];
      visited[far] = true;
      if (inner[far] >= 0) {
        const int e = g.edge_count++;
        g.crossings[c][slot] = e;
        g.crossings[inner[far] / 4][inner[far] % 4] = e;
        break;
      }
      cur = -inner[far] - 1;
    }
  }
  for (int start = 0; start < end_count; ++start) {
    if (visited[start]) continue;
    int cur = start;
    do {
      visited[cur] = true;
      const int far = ext[cur];
      visited[far] = true;
      cur = -inner[far] - 1;
    } while (cur != start);
    ++g.free_loops;
  }
  return g;
}

// --- Sweep order -----------------------------------------------------------

namespace {

struct SweepStep {
  std::vector<int> closing;
  std::vector<int> opening;
};

// Edges of crossing c that are already open, and those it opens.
SweepStep classify(const PlanarGraph& g, int c, const std::vector<char>& open) {
  SweepStep step;
  const auto& e = g.crossings[c];
  for (int s = 0; s < 4; ++s) {
    const int id = e[s];
    const int times = static_cast<int>(std::count(e.begin(), e.end(), id));
    if (open[id]) {
      if (std::find(step.closing.begin(), step.closing.end(), id) == step.closing.end()) {
        step.closing.push_back(id);
      }
    } else if (times == 1) {
      step.opening.push_back(id);
    }
  }
  return step;
}

std::pair<std::vector<int>, std::size_t> greedy_from(const PlanarGraph& g, int start) {
  const int n = static_cast<int>(g.crossings.size());
  std::vector<char> open(static_cast<std::size_t>(g.edge_count), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::size_t size = 0;
  std::size_t widest = 0;
  int next = start;
  for (int step = 0; step < n; ++step) {
    if (step > 0) {
      long best = std::numeric_limits<long>::max();
      for (int c = 0; c < n; ++c) {
        if (done[c]) continue;
        const SweepStep s = classify(g, c, open);
        // Prefer the smallest resulting frontier, then the most shared edges.
        const long score = (static_cast<long>(s.opening.size()) - static_cast<long>(s.closing.size())) * 8 -
                           static_cast<long>(s.closing.size());
        if (score < best) {
          best = score;
          next = c;
        }
      }
    }
    const SweepStep s = classify(g, next, open);
    for (int id : s.closing) open[id] = 0;
    for (int id : s.opening) open[id] = 1;
    size = size - s.closing.size() + s.opening.size();
    widest = std::max(widest, size);
    done[next] = 1;
    order.push_back(next);
  }
  return {order, widest};
}

}  // namespace

std::vector<int> contraction_order(const PlanarGraph& g) {
  const int n = static_cast<int>(g.crossings.size());
  std::vector<int> best_order;
  std::size_t best_width = std::numeric_limits<std::size_t>::max();
  const int starts = std::min(n, 64);
  for (int start = 0; start < starts; ++start) {
    auto [order, width] = greedy_from(g, start);
    if (width < best_width) {
      best_width = width;
      best_order = std::move(order);
    }
  }
  return best_order;
}

std::size_t frontier_width(const PlanarGraph& g, std::span<const int> order) {
  std::vector<char> open(static_cast<std::size_t>(g.edge_count), 0);
  std::size_t size = 0;
  std::size_t widest = 0;
  for (int c : order) {
    const SweepStep s = classify(g, c, open);
    for (int id : s.closing) open[id] = 0;
    for (int id : s.opening) open[id] = 1;
    size = size - s.closing.size() + s.opening.size();
    widest = std::max(widest, size);
  }
  return widest;
}

// --- Contraction -----------------------------------------------------------

const LaurentPolynomial& loop_value() {
  static const LaurentPolynomial delta =
      LaurentPolynomial::from_terms({{-2, -1}, {2, -1}}, Variable::A);
  return delta;
}

namespace {

// A-smoothing joins slots (0,1) and (2,3); B-smoothing joins (1,2) and (3,0).
constexpr std::array<std::array<std::array<int, 2>, 2>, 2> kSmoothings{{
    {{{0, 1}, {2, 3}}},
    {{{1, 2}, {3, 0}}},
}};
constexpr std::array<int, 2> kSmoothingWeight{+1, -1};

// Connectivity of frontier ends, as the partner position of every frontier edge.
using Matching = std::string;

class Contraction {
 public:
  explicit Contraction(const PlanarGraph& g) : g_(g), open_(static_cast<std::size_t>(g.edge_count), 0) {
    states_.emplace(Matching{}, LaurentPolynomial::constant(1, Variable::A));
  }

  void absorb(int c) {
    const auto& e = g_.crossings[c];
    const SweepStep step = classify(g_, c, open_);

    std::vector<int> next_frontier;
    for (int id : frontier_) {
      if (std::find(step.closing.begin(), step.closing.end(), id) == step.closing.end()) {
        next_frontier.push_back(id);
      }
    }
    next_frontier.insert(next_frontier.end(), step.opening.begin(), step.opening.end());
    std::sort(next_frontier.begin(), next_frontier.end());

    // Local node numbering: old frontier positions, then edges new to this step.
    std::vector<int> ids = frontier_;
    auto local = [&](int id) {
      auto it = std::find(ids.begin(), ids.end(), id);
      if (it != ids.end()) return static_cast<int>(it - ids.begin());
      ids.push_back(id);
      return static_cast<int>(ids.size()) - 1;
    };
    std::array<int, 4> slot_node{};
    for (int s = 0; s < 4; ++s) slot_node[s] = local(e[s]);
    const std::size_t nodes = ids.size();
    std::vector<int> next_pos(nodes, -1);
    for (std::size_t i = 0; i < nodes; ++i) {
      auto it = std::lower_bound(next_frontier.begin(), next_frontier.end(), ids[i]);
      if (it != next_frontier.end() && *it == ids[i]) next_pos[i] = static_cast<int>(it - next_frontier.begin());
    }

    std::unordered_map<Matching, LaurentPolynomial> next_states;
    std::vector<std::array<int, 2>> nbr(nodes);
    std::vector<int> deg(nodes);
    std::vector<char> seen(nodes);
    for (const auto& [matching, weight] : states_) {
      for (int kind = 0; kind < 2; ++kind) {
        std::fill(deg.begin(), deg.end(), 0);
        int loops = 0;
        auto link = [&](int a, int b) {
          if (a == b) {
            ++loops;
            return;
          }
          nbr[a][deg[a]++] = b;
          nbr[b][deg[b]++] = a;
        };
        for (std::size_t i = 0; i < matching.size(); ++i) {
          const int j = static_cast<unsigned char>(matching[i]);
          if (static_cast<int>(i) < j) link(static_cast<int>(i), j);
        }
        for (const auto& pr : kSmoothings[kind]) link(slot_node[pr[0]], slot_node[pr[1]]);

        Matching out(next_frontier.size(), '\0');
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t i = 0; i < nodes; ++i) {
          if (next_pos[i] < 0 || seen[i]) continue;
          int prev = -1;
          int cur = static_cast<int>(i);
          seen[cur] = 1;
          for (;;) {
            const int step_to = (deg[cur] == 1 || nbr[cur][0] != prev) ? nbr[cur][0] : nbr[cur][1];
            prev = cur;
            cur = step_to;
            seen[cur] = 1;
            if (next_pos[cur] >= 0) break;
          }
          out[next_pos[i]] = static_cast<char>(next_pos[cur]);
          out[next_pos[cur]] = static_cast<char>(next_pos[i]);
        }
        for (std::size_t i = 0; i < nodes; ++i) {
          if (seen[i] || deg[i] == 0) continue;
          ++loops;
          int prev = -1;
          int cur = static_cast<int>(i);
          while (!seen[cur]) {
            seen[cur] = 1;
            const int step_to = nbr[cur][0] != prev ? nbr[cur][0] : nbr[cur][1];
            prev = cur;
            cur = step_to;
          }
        }

        LaurentPolynomial term = weight.shifted(kSmoothingWeight[kind]);
        if (loops > 0) term *= delta_power(loops);
        auto [it, inserted] = next_states.try_emplace(std::move(out), std::move(term));
        if (!inserted) it->second += term;
      }
    }

    for (int id : step.closing) open_[id] = 0;
    for (int id : step.opening) open_[id] = 1;
    frontier_ = std::move(next_frontier);
    states_ = std::move(next_states);
  }

  LaurentPolynomial result() const {
    auto it = states_.find(Matching{});
    return it == states_.end() ? LaurentPolynomial(Variable::A) : it->second;
  }

 private:
  const LaurentPolynomial& delta_power(int k) {
    while (static_cast<int>(powers_.size()) <= k) {
      powers_.push_back(powers_.empty() ? LaurentPolynomial::constant(1, Variable::A)
                                        : powers_.back() * loop_value());
    }
    return powers_[static_cast<std::size_t>(k)];
  }

  const PlanarGraph& g_;
  std::vector<char> open_;
  std::vector<int> frontier_;
  std::unordered_map<Matching, LaurentPolynomial> states_;
  std::vector<LaurentPolynomial> powers_;
};

}  // namespace

LaurentPolynomial bracket_unnormalized(const PlanarGraph& g, const BracketOptions& options) {
  if (g.crossings.size() > options.max_crossings) {
    throw ResourceError("diagram has " + std::to_string(g.crossings.size()) +
                        " crossings; the bracket budget is max_crossings = " +
                        std::to_string(options.max_crossings));
  }
  LaurentPolynomial value = LaurentPolynomial::constant(1, Variable::A);
  if (!g.crossings.empty()) {
    const std::vector<int> order = contraction_order(g);
    const std::size_t width = frontier_width(g, order);
    if (width > options.max_frontier) {
      throw ResourceError("sweep frontier of " + std::to_string(width) +
                          " edges exceeds the budget max_frontier = " +
                          std::to_string(options.max_frontier));
    }
    Contraction contraction(g);
    for (int c : order) contraction.absorb(c);
    value = contraction.result();
  }
  if (g.free_loops > 0) value *= loop_value().pow(static_cast<unsigned>(g.free_loops));
  return value;
}

LaurentPolynomial kauffman_bracket(const LinkDiagram& d, const BracketOptions& options) {
  return bracket_unnormalized(planar_graph(d), options).exact_divide(loop_value());
}

}  // namespace knotvol
