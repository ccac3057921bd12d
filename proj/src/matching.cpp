#include "kp3/matching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace kp3 {

namespace {

bool contains(const VertexSet& set, int label) {
  return std::binary_search(set.begin(), set.end(), label);
}

}  // namespace

ColorTuple preprocess_tuple(const ColorTuple& tuple, const ColorLists& lists) {
  ColorTuple out;
  out.parts.reserve(tuple.parts.size());
  for (int c = 0; c < tuple.color_count(); ++c) {
    const int color = c + 1;
    VertexSet kept;
    for (int v : tuple.parts[c]) {
      const auto& list = lists.at(v);
      if (std::binary_search(list.begin(), list.end(), color)) kept.push_back(v);
    }
    out.parts.push_back(std::move(kept));
  }
  return out;
}

long long AuxiliaryBipartiteGraph::edge_count() const {
  long long total = 0;
  for (const auto& slots_of_y : y_slots) total += static_cast<long long>(slots_of_y.size());
  return total;
}

AuxiliaryBipartiteGraph build_auxiliary(const Graph& g, const ColorTuple& tuple,
                                        const std::vector<Rational>& weights) {
  AuxiliaryBipartiteGraph b;
  for (const VertexSet& part : tuple.parts) {
    require_vertex_set(g, part, "build_auxiliary");
    b.y_vertices.insert(b.y_vertices.end(), part.begin(), part.end());
  }
  std::sort(b.y_vertices.begin(), b.y_vertices.end());
  b.y_vertices.erase(std::unique(b.y_vertices.begin(), b.y_vertices.end()), b.y_vertices.end());

  b.y_weights.reserve(b.y_vertices.size());
  for (int v : b.y_vertices) b.y_weights.push_back(weights.at(v));
  b.y_slots.assign(b.y_vertices.size(), {});

  for (int c = 0; c < tuple.color_count(); ++c) {
    const auto components = connected_components(induced_subgraph(g, tuple.parts[c]));
    for (std::size_t j = 0; j < components.size(); ++j) {
      const int slot = static_cast<int>(b.slots.size());
      b.slots.push_back({c + 1, static_cast<int>(j), components[j]});
      for (int v : components[j]) {
        const auto at = std::lower_bound(b.y_vertices.begin(), b.y_vertices.end(), v) -
                        b.y_vertices.begin();
        b.y_slots[at].push_back(slot);
      }
    }
  }
  return b;
}

namespace {

// Maximum-weight matchable subsets of the Y side form a transversal matroid,
// so scanning vertices by descending weight and keeping each one that still
// admits an augmenting path yields the exact optimum. `edge_allowed`
// restricts the usable edges, `y_blocked`/`slot_blocked` drop nodes already
// consumed by forced edges.
struct GreedyMatcher {
  const AuxiliaryBipartiteGraph& b;
  std::vector<int> slot_match;  // slot -> y index or -1
  std::vector<int> y_match;     // y index -> slot or -1
  std::vector<char> slot_seen;

  explicit GreedyMatcher(const AuxiliaryBipartiteGraph& b)
      : b(b),
        slot_match(b.slots.size(), -1),
        y_match(b.y_vertices.size(), -1),
        slot_seen(b.slots.size(), 0) {}

  bool augment(int y, const std::function<bool(int, int)>& edge_allowed) {
    for (int slot : b.y_slots[y]) {
      if (slot_seen[slot] || !edge_allowed(y, slot)) continue;
      slot_seen[slot] = 1;
      if (slot_match[slot] < 0 || augment(slot_match[slot], edge_allowed)) {
        slot_match[slot] = y;
        y_match[y] = slot;
        return true;
      }
    }
    return false;
  }

  Rational run(const std::vector<int>& y_order, const std::function<bool(int, int)>& edge_allowed,
               const std::vector<char>& y_blocked, const std::vector<char>& slot_blocked) {
    Rational total = 0;
    for (int y : y_order) {
      if (y_blocked[y]) continue;
      for (int slot = 0; slot < static_cast<int>(b.slots.size()); ++slot) {
        slot_seen[slot] = slot_blocked[slot];
      }
      if (augment(y, edge_allowed)) total += b.y_weights[y];
    }
    return total;
  }
};

// Weight of a maximum-weight matching subject to forced and excluded edges:
// forced edges contribute their weight and block their endpoints.
Rational constrained_optimum(const AuxiliaryBipartiteGraph& b, const std::vector<int>& y_order,
                             const std::vector<std::pair<int, int>>& forced,
                             const std::vector<std::vector<char>>& excluded) {
  std::vector<char> y_blocked(b.y_vertices.size(), 0);
  std::vector<char> slot_blocked(b.slots.size(), 0);
  Rational base = 0;
  for (const auto& [y, slot] : forced) {
    y_blocked[y] = 1;
    slot_blocked[slot] = 1;
    base += b.y_weights[y];
  }
  const auto edge_allowed = [&](int y, int slot) { return !excluded[y][slot]; };
  GreedyMatcher matcher(b);
  return base + matcher.run(y_order, edge_allowed, y_blocked, slot_blocked);
}

}  // namespace

Matching max_weight_matching(const AuxiliaryBipartiteGraph& b) {
  for (const Rational& w : b.y_weights) {
    if (w < 0) throw std::invalid_argument("max_weight_matching: negative weight");
  }

  // Vertex scan order: weight descending, then label ascending.
  std::vector<int> y_order(b.y_vertices.size());
  for (std::size_t i = 0; i < y_order.size(); ++i) y_order[i] = static_cast<int>(i);
  std::stable_sort(y_order.begin(), y_order.end(),
                   [&](int lhs, int rhs) { return b.y_weights[lhs] > b.y_weights[rhs]; });

  std::vector<std::vector<char>> excluded(b.y_vertices.size(),
                                          std::vector<char>(b.slots.size(), 0));
  const Rational optimum = constrained_optimum(b, y_order, {}, excluded);

  // Canonicalization: walk the edges in (y, slot) order and keep an edge
  // exactly when some optimum-weight matching extends the decisions so far
  // with it. The result is the lexicographically smallest optimal edge set
  // (missing edges compare as +infinity).
  std::vector<std::pair<int, int>> forced;
  std::vector<char> y_used(b.y_vertices.size(), 0);
  std::vector<char> slot_used(b.slots.size(), 0);
  for (int y = 0; y < static_cast<int>(b.y_vertices.size()); ++y) {
    for (int slot : b.y_slots[y]) {
      if (y_used[y] || slot_used[slot]) {
        excluded[y][slot] = 1;
        continue;
      }
      forced.emplace_back(y, slot);
      if (constrained_optimum(b, y_order, forced, excluded) == optimum) {
        y_used[y] = 1;
        slot_used[slot] = 1;
      } else {
        forced.pop_back();
        excluded[y][slot] = 1;
      }
    }
  }

  Matching m;
  m.total_weight = 0;
  for (const auto& [y, slot] : forced) {
    m.edges.push_back({b.y_vertices[y], slot});
    m.total_weight += b.y_weights[y];
  }
  std::sort(m.edges.begin(), m.edges.end(), [](const MatchedEdge& lhs, const MatchedEdge& rhs) {
    return std::tie(lhs.vertex, lhs.slot) < std::tie(rhs.vertex, rhs.slot);
  });
  if (m.total_weight != optimum) {
    throw std::logic_error("max_weight_matching: canonicalization lost weight");
  }
  return m;
}

ColoredSubgraph extract_solution(const Graph& g, const ColorTuple& tuple, const Matching& m,
                                 int d) {
  // Rebuild the slot table; build_auxiliary orders components deterministically.
  std::vector<AuxSlot> slots;
  for (int c = 0; c < tuple.color_count(); ++c) {
    const auto components = connected_components(induced_subgraph(g, tuple.parts[c]));
    for (std::size_t j = 0; j < components.size(); ++j) {
      slots.push_back({c + 1, static_cast<int>(j), components[j]});
    }
  }

  ColoredSubgraph out;
  for (const MatchedEdge& edge : m.edges) {
    const AuxSlot& slot = slots.at(edge.slot);
    if (!contains(slot.vertices, edge.vertex)) {
      throw std::logic_error("extract_solution: matched edge is not an edge of B");
    }
    out.vertices.push_back(edge.vertex);
    out.coloring[edge.vertex] = slot.color;
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.weight = m.total_weight;

  // Same-colored vertices come from distinct clique components, which the
  // tuple promises are pairwise at distance >= d; re-check.
  for (std::size_t a = 0; a < out.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
      const int u = out.vertices[a];
      const int v = out.vertices[b];
      if (out.coloring[u] != out.coloring[v]) continue;
      const int dist = g.dist_at(g.index_of(u), g.index_of(v));
      if (dist >= 0 && dist < d) {
        throw std::logic_error("extract_solution: color class violates the distance bound");
      }
    }
  }
  return out;
}

bool check_colored_subgraph(const Graph& g, const ColorTuple& tuple, const ColorLists& lists,
                            int d, const ColoredSubgraph& h, std::string* why) {
  const auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  for (int v : h.vertices) {
    const auto it = h.coloring.find(v);
    if (it == h.coloring.end()) return fail("vertex without a color");
    const int color = it->second;
    const auto& list = lists.at(v);
    if (!std::binary_search(list.begin(), list.end(), color)) {
      return fail("color not in the vertex list");
    }
    if (color < 1 || color > tuple.color_count() || !contains(tuple.parts[color - 1], v)) {
      return fail("color class not contained in its part");
    }
  }
  if (h.coloring.size() != h.vertices.size()) return fail("coloring domain mismatch");
  for (std::size_t a = 0; a < h.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < h.vertices.size(); ++b) {
      const int u = h.vertices[a];
      const int v = h.vertices[b];
      if (h.coloring.at(u) != h.coloring.at(v)) continue;
      const int dist = g.dist_at(g.index_of(u), g.index_of(v));
      if (dist >= 0 && dist < d) return fail("same color within distance d");
    }
  }
  return true;
}

}  // namespace kp3
