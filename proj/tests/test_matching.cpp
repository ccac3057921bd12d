#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kp3/matching.hpp"
#include "kp3/oracles.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <climits>

using namespace kp3;
using namespace kp3::testutil;

namespace {

ColorLists random_lists(int n, int r, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ColorLists lists(n);
  for (int v = 0; v < n; ++v) {
    for (int c = 1; c <= r; ++c) {
      if (rng.chance(700)) lists[v].push_back(c);
    }
  }
  return lists;
}

// Brute force over every matching of B: the optimum weight plus the
// lexicographically smallest optimal edge set in the canonical edge order
// (missing edges compare as +infinity). Independent of the implementation.
struct AllMatchingsOracle {
  const AuxiliaryBipartiteGraph& b;
  std::vector<std::pair<int, int>> edges;  // (y, slot) in canonical order
  Rational best_weight = 0;
  std::vector<int> best_ids;
  bool have = false;

  explicit AllMatchingsOracle(const AuxiliaryBipartiteGraph& b) : b(b) {
    for (int y = 0; y < static_cast<int>(b.y_vertices.size()); ++y) {
      for (int slot : b.y_slots[y]) edges.emplace_back(y, slot);
    }
    std::vector<char> y_used(b.y_vertices.size(), 0), slot_used(b.slots.size(), 0);
    std::vector<int> ids;
    explore(0, 0, y_used, slot_used, ids);
  }

  // padded-infinity lexicographic order on ascending id sequences
  static bool lex_less(const std::vector<int>& lhs, const std::vector<int>& rhs) {
    for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
      const int a = i < lhs.size() ? lhs[i] : INT_MAX;
      const int b = i < rhs.size() ? rhs[i] : INT_MAX;
      if (a != b) return a < b;
    }
    return false;
  }

  void explore(std::size_t from, Rational weight, std::vector<char>& y_used,
               std::vector<char>& slot_used, std::vector<int>& ids) {
    if (!have || weight > best_weight ||
        (weight == best_weight && lex_less(ids, best_ids))) {
      have = true;
      best_weight = weight;
      best_ids = ids;
    }
    for (std::size_t e = from; e < edges.size(); ++e) {
      const auto& [y, slot] = edges[e];
      if (y_used[y] || slot_used[slot]) continue;
      y_used[y] = slot_used[slot] = 1;
      ids.push_back(static_cast<int>(e));
      explore(e + 1, weight + b.y_weights[y], y_used, slot_used, ids);
      ids.pop_back();
      y_used[y] = slot_used[slot] = 0;
    }
  }
};

}  // namespace

TEST_CASE("preprocess drops vertices whose list misses the color") {
  // S1 = {a,b} with 1 not in L(a): a survives only where its list allows
  const ColorLists lists{{2}, {1, 2}};
  const ColorTuple tuple{{{0, 1}, {}}};
  const ColorTuple pre = preprocess_tuple(tuple, lists);
  CHECK(pre.parts[0] == VertexSet{1});
  CHECK(pre.parts[1] == VertexSet{});

  const ColorLists full{{1, 2}, {1, 2}};
  const ColorTuple both{{{0, 1}, {0}}};
  CHECK(preprocess_tuple(both, full).parts == both.parts);

  const ColorLists empty{{}, {}};
  const ColorTuple wiped = preprocess_tuple(both, empty);
  CHECK(wiped.parts[0].empty());
  CHECK(wiped.parts[1].empty());
}

TEST_CASE("auxiliary graph structure") {
  const Graph k2 = complete(2);
  const std::vector<Rational> unit(2, 1);

  const ColorTuple tuple{{{0, 1}, {0}}};
  const AuxiliaryBipartiteGraph b = build_auxiliary(k2, tuple, unit);
  REQUIRE(b.slots.size() == 2);
  CHECK(b.slots[0].color == 1);
  CHECK(b.slots[0].vertices == VertexSet{0, 1});
  CHECK(b.slots[1].color == 2);
  CHECK(b.slots[1].vertices == VertexSet{0});
  CHECK(b.y_vertices == VertexSet{0, 1});
  CHECK(b.y_slots == std::vector<std::vector<int>>{{0, 1}, {0}});
  CHECK(b.node_count() == 4);

  const ColorTuple empty{{{}, {}}};
  CHECK(build_auxiliary(k2, empty, unit).node_count() == 0);

  // two isolated vertices in one part give two slots
  const Graph two(2, {});
  const ColorTuple split{{{0, 1}}};
  const AuxiliaryBipartiteGraph b2 = build_auxiliary(two, split, unit);
  REQUIRE(b2.slots.size() == 2);
  CHECK(b2.y_slots == std::vector<std::vector<int>>{{0}, {1}});

  CHECK_THROWS_AS(build_auxiliary(k2, ColorTuple{{{0, 7}}}, unit), std::invalid_argument);
}

TEST_CASE("auxiliary graph size is at most (r+1) n") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(8, 400, seed);
    SplitMix64 rng(seed * 5 + 1);
    const int r = 1 + static_cast<int>(seed % 3);
    ColorTuple tuple;
    for (int c = 0; c < r; ++c) tuple.parts.push_back(random_valid_part(g, 2, rng));
    const std::vector<Rational> unit(8, 1);
    const AuxiliaryBipartiteGraph b = build_auxiliary(g, tuple, unit);
    CHECK(b.node_count() <= (r + 1) * g.vertex_count());
  }
}

TEST_CASE("matching weight and canonical edge set on the K2 instance") {
  const Graph k2 = complete(2);
  const std::vector<Rational> unit(2, 1);
  const ColorTuple tuple{{{0, 1}, {0}}};
  const AuxiliaryBipartiteGraph b = build_auxiliary(k2, tuple, unit);
  const Matching m = max_weight_matching(b);
  CHECK(m.total_weight == 2);
  // y_0 must go to the color-2 slot so that y_1 can use the color-1 clique
  CHECK(m.edges == std::vector<MatchedEdge>{{0, 1}, {1, 0}});

  const ColoredSubgraph h = extract_solution(k2, tuple, m, 2);
  CHECK(h.vertices == VertexSet{0, 1});
  CHECK(h.coloring.at(0) == 2);
  CHECK(h.coloring.at(1) == 1);
  CHECK(h.weight == 2);
  const ColorLists full{{1, 2}, {1, 2}};
  CHECK(check_colored_subgraph(k2, tuple, full, 2, h));
}

TEST_CASE("matching edge cases") {
  CHECK(max_weight_matching(AuxiliaryBipartiteGraph{}).total_weight == 0);

  AuxiliaryBipartiteGraph single;
  single.slots = {{1, 0, {3}}};
  single.y_vertices = {3};
  single.y_weights = {Rational(5, 2)};
  single.y_slots = {{0}};
  const Matching m = max_weight_matching(single);
  CHECK(m.total_weight == Rational(5, 2));
  CHECK(m.edges == std::vector<MatchedEdge>{{3, 0}});

  single.y_weights = {Rational(-1)};
  CHECK_THROWS_AS(max_weight_matching(single), std::invalid_argument);
}

TEST_CASE("extract on the empty matching") {
  const Graph k2 = complete(2);
  const ColorTuple tuple{{{0, 1}}};
  const ColoredSubgraph h = extract_solution(k2, tuple, Matching{}, 2);
  CHECK(h.vertices.empty());
  CHECK(h.coloring.empty());
  CHECK(h.weight == 0);
}

TEST_CASE("extract on a single matched edge") {
  const Graph g(4, {});
  const ColorTuple tuple{{{3}}};
  const std::vector<Rational> weights{1, 1, 1, Rational(5, 2)};
  const Matching m = max_weight_matching(build_auxiliary(g, tuple, weights));
  const ColoredSubgraph h = extract_solution(g, tuple, m, 2);
  CHECK(h.vertices == VertexSet{3});
  CHECK(h.coloring.at(3) == 1);
  CHECK(h.weight == Rational(5, 2));
}

TEST_CASE("matching weight equals the colored-subgraph oracle") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const int r = 1 + static_cast<int>(seed % 2);
    const int d = seed % 3 == 0 ? 6 : 2;
    const Graph g = random_graph(n, 350, seed + 4000);
    SplitMix64 rng(seed * 13 + 5);
    ColorTuple tuple;
    for (int c = 0; c < r; ++c) tuple.parts.push_back(random_valid_part(g, d, rng));
    const ColorLists lists = random_lists(n, r, seed * 7 + 3);
    std::vector<Rational> weights;
    for (int v = 0; v < n; ++v) weights.emplace_back(static_cast<long long>(rng.below(11)));

    const ColorTuple pre = preprocess_tuple(tuple, lists);
    const Matching m = max_weight_matching(build_auxiliary(g, pre, weights));
    CHECK(m.total_weight == max_colored_subgraph_oracle(g, tuple, weights, lists, d));

    const ColoredSubgraph h = extract_solution(g, pre, m, d);
    std::string why;
    CHECK_MESSAGE(check_colored_subgraph(g, pre, lists, d, h, &why), why);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("matching matches the all-matchings oracle, weight and edge set") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const int r = 1 + static_cast<int>(seed % 2);
    const Graph g = random_graph(n, 400, seed + 8000);
    SplitMix64 rng(seed * 3 + 11);
    ColorTuple tuple;
    for (int c = 0; c < r; ++c) tuple.parts.push_back(random_valid_part(g, 2, rng));
    std::vector<Rational> weights;
    for (int v = 0; v < n; ++v) {
      // small range on purpose: plenty of ties for the canonicalization
      weights.emplace_back(static_cast<long long>(rng.below(3)));
    }
    const AuxiliaryBipartiteGraph b = build_auxiliary(g, tuple, weights);
    const Matching m = max_weight_matching(b);
    const AllMatchingsOracle oracle(b);
    CHECK(m.total_weight == oracle.best_weight);
    // recover the canonical ids of the returned edges and compare exactly
    std::vector<int> returned;
    for (const MatchedEdge& edge : m.edges) {
      const auto y = std::lower_bound(b.y_vertices.begin(), b.y_vertices.end(), edge.vertex) -
                     b.y_vertices.begin();
      for (std::size_t e = 0; e < oracle.edges.size(); ++e) {
        if (oracle.edges[e] == std::make_pair(static_cast<int>(y), edge.slot)) {
          returned.push_back(static_cast<int>(e));
        }
      }
    }
    std::sort(returned.begin(), returned.end());
    CHECK(returned == oracle.best_ids);
  }
}

TEST_CASE("exact rational weights survive the matching") {
  const Graph g(3, {});
  const ColorTuple tuple{{{0, 1, 2}}};
  const std::vector<Rational> weights{Rational(1, 3), Rational(1, 6), Rational(7, 2)};
  const Matching m = max_weight_matching(build_auxiliary(g, tuple, weights));
  CHECK(m.total_weight == Rational(1, 3) + Rational(1, 6) + Rational(7, 2));
  CHECK(rational_to_string(m.total_weight) == "4");
}
