#include "kp3/oracles.hpp"

#include "kp3/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace kp3 {

namespace {

void check_budget(const Graph& g, const OracleBudget& budget, const char* what) {
  if (g.vertex_count() > budget.max_vertices) {
    throw budget_error(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                       " vertices exceed the budget of " + std::to_string(budget.max_vertices));
  }
  if (g.vertex_count() > 63) {
    throw budget_error(std::string(what) + ": bitmask enumeration caps at 63 vertices");
  }
}

VertexSet mask_to_labels(const Graph& g, std::uint64_t mask) {
  VertexSet out;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (mask >> i & 1) out.push_back(g.label_at(i));
  }
  return out;
}

// Backtracking list colorability of the subgraph of g induced by the index
// mask, with adjacency taken from `adjacent`. Colors are 1-based.
bool colorable_rec(const std::vector<int>& verts, std::size_t at, std::vector<int>& color,
                   const std::function<bool(int, int)>& adjacent, const ColorLists& lists,
                   const Graph& g) {
  if (at == verts.size()) return true;
  const int v = verts[at];
  for (int c : lists[g.label_at(v)]) {
    bool clash = false;
    for (std::size_t j = 0; j < at; ++j) {
      if (color[j] == c && adjacent(verts[j], v)) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[at] = c;
    if (colorable_rec(verts, at + 1, color, adjacent, lists, g)) return true;
  }
  return false;
}

bool subset_list_colorable(const Graph& g, std::uint64_t mask, const ColorLists& lists) {
  std::vector<int> verts;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (mask >> i & 1) verts.push_back(i);
  }
  std::vector<int> color(verts.size(), 0);
  const auto adjacent = [&](int a, int b) { return g.adjacency_row(a).test(b); };
  return colorable_rec(verts, 0, color, adjacent, lists, g);
}

bool subset_bipartite(const Graph& g, std::uint64_t keep) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (!(keep >> s & 1) || side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int at = stack.back();
      stack.pop_back();
      const Bits& row = g.adjacency_row(at);
      for (auto next = row.find_first(); next != Bits::npos; next = row.find_next(next)) {
        if (!(keep >> next & 1)) continue;
        if (side[next] < 0) {
          side[next] = 1 - side[at];
          stack.push_back(static_cast<int>(next));
        } else if (side[next] == side[at]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Rational brute_mwlcis(const Instance& inst, const OracleBudget& budget) {
  validate_instance(inst);
  const Graph& g = inst.graph;
  check_budget(g, budget, "brute_mwlcis");
  const int n = g.vertex_count();
  std::vector<Rational> weight_by_index(n);
  for (int i = 0; i < n; ++i) weight_by_index[i] = inst.weights[g.label_at(i)];
  Rational best = 0;  // the empty subgraph is always colorable
  for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
    Rational w = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) w += weight_by_index[i];
    }
    if (w <= best) continue;
    if (subset_list_colorable(g, mask, inst.lists)) best = w;
  }
  return best;
}

Rational brute_oct(const Graph& g, const std::vector<Rational>& weights,
                   const OracleBudget& budget) {
  check_budget(g, budget, "brute_oct");
  const int n = g.vertex_count();
  if (static_cast<int>(weights.size()) <= (n == 0 ? -1 : g.labels().back())) {
    throw std::invalid_argument("brute_oct: weight table too small");
  }
  std::vector<Rational> weight_by_index(n);
  for (int i = 0; i < n; ++i) weight_by_index[i] = weights[g.label_at(i)];
  bool have = false;
  Rational best = 0;
  for (std::uint64_t removed = 0; removed < (1ULL << n); ++removed) {
    Rational w = 0;
    for (int i = 0; i < n; ++i) {
      if (removed >> i & 1) w += weight_by_index[i];
    }
    if (have && w >= best) continue;
    if (subset_bipartite(g, ~removed)) {
      best = w;
      have = true;
    }
  }
  return best;
}

Rational brute_distance_mwis(const Graph& g, const std::vector<Rational>& weights, int d,
                             const OracleBudget& budget) {
  check_budget(g, budget, "brute_distance_mwis");
  const Graph p = power_graph(g, d);
  const int n = p.vertex_count();
  std::vector<Rational> weight_by_index(n);
  for (int i = 0; i < n; ++i) weight_by_index[i] = weights[p.label_at(i)];
  Rational best = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    bool independent = true;
    for (int i = 0; i < n && independent; ++i) {
      if (!(mask >> i & 1)) continue;
      Bits row = p.adjacency_row(i);
      for (auto j = row.find_next(i); j != Bits::npos; j = row.find_next(j)) {
        if (mask >> j & 1) {
          independent = false;
          break;
        }
      }
    }
    if (!independent) continue;
    Rational w = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) w += weight_by_index[i];
    }
    if (w > best) best = w;
  }
  return best;
}

bool brute_list_dr_coloring(const Instance& inst, const OracleBudget& budget) {
  validate_instance(inst);
  check_budget(inst.graph, budget, "brute_list_dr_coloring");
  const Graph p = power_graph(inst.graph, inst.d);
  const std::uint64_t all = inst.graph.vertex_count() == 0
                                ? 0
                                : (1ULL << inst.graph.vertex_count()) - 1;
  return subset_list_colorable(p, all, inst.lists);
}

namespace {

void bron_kerbosch(const Graph& g, const std::vector<std::uint64_t>& nonadj, std::uint64_t r,
                   std::uint64_t p, std::uint64_t x, std::vector<VertexSet>& out,
                   long long max_sets) {
  if (p == 0 && x == 0) {
    if (static_cast<long long>(out.size()) >= max_sets) {
      throw budget_error("enumerate_maximal_independent_sets: too many sets");
    }
    out.push_back(mask_to_labels(g, r));
    return;
  }
  // pivot maximizing |P & nonadj(u)|
  int pivot = -1;
  int best_cover = -1;
  for (std::uint64_t rest = p | x; rest != 0; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const int cover = std::popcount(p & nonadj[u]);
    if (cover > best_cover) {
      best_cover = cover;
      pivot = u;
    }
  }
  std::uint64_t candidates = p & ~nonadj[pivot];
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = 1ULL << v;
    candidates &= candidates - 1;
    bron_kerbosch(g, nonadj, r | bit, p & nonadj[v], x & nonadj[v], out, max_sets);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g,
                                                          const OracleBudget& budget) {
  check_budget(g, budget, "enumerate_maximal_independent_sets");
  const int n = g.vertex_count();
  std::vector<std::uint64_t> nonadj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && !g.adjacency_row(i).test(j)) nonadj[i] |= 1ULL << j;
    }
  }
  std::vector<VertexSet> out;
  const std::uint64_t all = n == 0 ? 0 : (1ULL << n) - 1;
  bron_kerbosch(g, nonadj, 0, all, 0, out, budget.max_sets);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct P3Pattern {
  std::uint64_t vertices;
  std::uint64_t closed;  // vertices plus all their neighbors
};

bool pick_disjoint(const std::vector<P3Pattern>& p3s, std::size_t from, int need,
                   std::uint64_t forbidden) {
  if (need == 0) return true;
  if (p3s.size() - from < static_cast<std::size_t>(need)) return false;
  for (std::size_t i = from; i + need <= p3s.size(); ++i) {
    if ((p3s[i].vertices & forbidden) != 0) continue;
    if (pick_disjoint(p3s, i + 1, need - 1, forbidden | p3s[i].closed)) return true;
  }
  return false;
}

}  // namespace

bool contains_k_disjoint_p3(const Graph& g, int k, const OracleBudget& budget) {
  if (k < 1) throw std::invalid_argument("contains_k_disjoint_p3: k must be >= 1");
  const int n = g.vertex_count();
  if (3 * k > n) return false;
  check_budget(g, budget, "contains_k_disjoint_p3");
  // Independent triple scan; deliberately not shared with enumerate_induced_p3.
  std::vector<P3Pattern> p3s;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const int ab = g.adjacency_row(a).test(b);
        const int ac = g.adjacency_row(a).test(c);
        const int bc = g.adjacency_row(b).test(c);
        if (ab + ac + bc != 2) continue;
        std::uint64_t verts = (1ULL << a) | (1ULL << b) | (1ULL << c);
        std::uint64_t closed = verts;
        for (int v : {a, b, c}) {
          const Bits& row = g.adjacency_row(v);
          for (auto w = row.find_first(); w != Bits::npos; w = row.find_next(w)) {
            closed |= 1ULL << w;
          }
        }
        p3s.push_back({verts, closed});
      }
    }
  }
  return pick_disjoint(p3s, 0, k, 0);
}

Rational max_colored_subgraph_oracle(const Graph& g, const ColorTuple& tuple,
                                     const std::vector<Rational>& weights,
                                     const ColorLists& lists, int d,
                                     const OracleBudget& budget) {
  VertexSet universe;
  for (const VertexSet& part : tuple.parts) {
    require_vertex_set(g, part, "max_colored_subgraph_oracle");
    universe.insert(universe.end(), part.begin(), part.end());
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  const int m = static_cast<int>(universe.size());
  if (m > budget.max_vertices || m > 63) {
    throw budget_error("max_colored_subgraph_oracle: union of parts exceeds the budget");
  }

  const int r = tuple.color_count();
  // member_of[c] bit i set when universe[i] lies in part c.
  std::vector<std::uint64_t> member_of(r, 0);
  for (int c = 0; c < r; ++c) {
    for (int v : tuple.parts[c]) {
      const auto at = std::lower_bound(universe.begin(), universe.end(), v) - universe.begin();
      member_of[c] |= 1ULL << at;
    }
  }

  // assign colors to the subset's vertices in label order, backtracking
  std::vector<int> chosen_color(m, 0);
  std::function<bool(std::size_t, const std::vector<int>&)> assign =
      [&](std::size_t at, const std::vector<int>& verts) -> bool {
    if (at == verts.size()) return true;
    const int i = verts[at];
    const int label = universe[i];
    for (int c : lists[label]) {
      if (!(member_of[c - 1] >> i & 1)) continue;
      bool clash = false;
      for (std::size_t j = 0; j < at; ++j) {
        if (chosen_color[verts[j]] != c) continue;
        const int dist = g.dist_at(g.index_of(universe[verts[j]]), g.index_of(label));
        if (dist >= 0 && dist < d) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      chosen_color[i] = c;
      if (assign(at + 1, verts)) return true;
    }
    return false;
  };

  Rational best = 0;  // the empty subgraph is always colorable
  for (std::uint64_t subset = 1; subset < (1ULL << m); ++subset) {
    Rational w = 0;
    for (int i = 0; i < m; ++i) {
      if (subset >> i & 1) w += weights[universe[i]];
    }
    if (w <= best) continue;
    std::vector<int> verts;
    for (int i = 0; i < m; ++i) {
      if (subset >> i & 1) verts.push_back(i);
    }
    if (assign(0, verts)) best = w;
  }
  return best;
}

}  // namespace kp3
