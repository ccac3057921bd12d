#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kp3/errors.hpp"
#include "kp3/oracles.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <map>

using namespace kp3;
using namespace kp3::testutil;

namespace {

Instance unit_instance(Graph g, int r, int d = 2) {
  return make_instance(std::move(g), r, 1, d);
}

// test-local brute MWIS: all subsets, pairwise adjacency check on g itself
Rational mwis_by_subsets(const Graph& g, const std::vector<Rational>& weights) {
  const int n = g.vertex_count();
  Rational best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    Rational w = 0;
    for (int a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      w += weights[g.label_at(a)];
      for (int b = a + 1; b < n; ++b) {
        if ((mask >> b & 1) && g.adjacency_row(a).test(b)) {
          ok = false;
          break;
        }
      }
    }
    if (ok && w > best) best = w;
  }
  return best;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("brute_mwlcis on the named cases") {
  CHECK(brute_mwlcis(unit_instance(complete(3), 2)) == 2);
  CHECK(brute_mwlcis(unit_instance(Graph(4, {}), 1)) == 4);
  CHECK(brute_mwlcis(unit_instance(cycle(5), 2)) == 4);
}

TEST_CASE("brute_oct on the named cases") {
  const std::vector<Rational> unit5(5, 1), unit4(4, 1);
  CHECK(brute_oct(cycle(5), unit5) == 1);
  CHECK(brute_oct(cycle(6), std::vector<Rational>(6, 1)) == 0);
  CHECK(brute_oct(complete(4), unit4) == 2);
}

TEST_CASE("brute_distance_mwis on the named cases") {
  const std::vector<Rational> unit7(7, 1), unit3(3, 1);
  CHECK(brute_distance_mwis(path(7), unit7, 6) == 2);
  CHECK(brute_distance_mwis(complete(3), unit3, 6) == 1);
}

TEST_CASE("brute_distance_mwis at d=2 is the classical brute MWIS") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = random_graph(8, 350, seed + 77);
    SplitMix64 rng(seed);
    std::vector<Rational> weights;
    for (int v = 0; v < 8; ++v) weights.emplace_back(static_cast<long long>(rng.below(11)));
    CHECK(brute_distance_mwis(g, weights, 2) == mwis_by_subsets(g, weights));
  }
}

TEST_CASE("brute_list_dr_coloring on the named cases") {
  CHECK(brute_list_dr_coloring(unit_instance(path(2), 2, 6)));
  CHECK_FALSE(brute_list_dr_coloring(unit_instance(complete(4), 3, 2)));
  CHECK_FALSE(brute_list_dr_coloring(unit_instance(path(7), 2, 6)));
}

TEST_CASE("maximal independent set enumeration") {
  const auto c5 = enumerate_maximal_independent_sets(cycle(5));
  CHECK(c5.size() == 5);
  for (const auto& s : c5) CHECK(s.size() == 2);

  const auto kn = enumerate_maximal_independent_sets(complete(4));
  CHECK(kn == std::vector<VertexSet>{{0}, {1}, {2}, {3}});

  CHECK(enumerate_maximal_independent_sets(Graph(3, {})) ==
        std::vector<VertexSet>{{0, 1, 2}});
}

TEST_CASE("maximal independent sets verified exhaustively") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_graph(8, 400, seed + 500);
    const auto enumerated = enumerate_maximal_independent_sets(g);
    // every subset: maximal independent iff it appears exactly once
    std::map<VertexSet, int> seen;
    for (const auto& s : enumerated) seen[s]++;
    int count = 0;
    for (unsigned mask = 0; mask < (1u << 8); ++mask) {
      VertexSet s;
      for (int v = 0; v < 8; ++v) {
        if (mask >> v & 1) s.push_back(v);
      }
      bool independent = true;
      for (std::size_t a = 0; a < s.size() && independent; ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          if (g.adjacent(s[a], s[b])) independent = false;
        }
      }
      if (!independent) continue;
      bool maximal = true;
      for (int v = 0; v < 8 && maximal; ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        bool extends = true;
        for (int u : s) {
          if (g.adjacent(u, v)) extends = false;
        }
        if (extends) maximal = false;
      }
      if (!maximal) continue;
      ++count;
      CHECK(seen[s] == 1);
    }
    CHECK(count == static_cast<int>(enumerated.size()));
  }
}

TEST_CASE("kP3 detection") {
  const Graph two_p3 = Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  CHECK(contains_k_disjoint_p3(two_p3, 2));
  CHECK(contains_k_disjoint_p3(two_p3, 1));

  CHECK_FALSE(contains_k_disjoint_p3(random_graph(5, 500, 3), 2));  // needs 6 vertices

  // the two end-P3s of P6 touch through the middle edge
  CHECK_FALSE(contains_k_disjoint_p3(path(6), 2));
  CHECK(contains_k_disjoint_p3(path(7), 2));
}

TEST_CASE("kP3 detection is monotone in k") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(10, 250, seed + 900);
    bool previous = true;
    for (int k = 1; k <= 3; ++k) {
      const bool now = contains_k_disjoint_p3(g, k);
      if (!previous) CHECK_FALSE(now);
      previous = now;
    }
  }
}

TEST_CASE("oracles are isomorphism invariant") {
  const std::vector<int> perm{3, 0, 5, 1, 4, 2};
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = random_graph(6, 400, seed + 41);
    const Graph h = relabeled(g, perm);
    SplitMix64 rng(seed);
    std::vector<Rational> wg(6), wh(6);
    for (int v = 0; v < 6; ++v) {
      wg[v] = Rational(static_cast<long long>(rng.below(9)));
      wh[perm[v]] = wg[v];
    }
    CHECK(brute_oct(g, wg) == brute_oct(h, wh));
    CHECK(brute_distance_mwis(g, wg, 3) == brute_distance_mwis(h, wh, 3));
    CHECK(enumerate_maximal_independent_sets(g).size() ==
          enumerate_maximal_independent_sets(h).size());
    CHECK(contains_k_disjoint_p3(g, 2) == contains_k_disjoint_p3(h, 2));
  }
}

TEST_CASE("budget refusals") {
  const Graph big = random_graph(17, 200, 9);
  CHECK_THROWS_AS(enumerate_maximal_independent_sets(big), budget_error);
  CHECK_THROWS_AS(brute_oct(big, std::vector<Rational>(17, 1)), budget_error);
  CHECK_THROWS_AS(contains_k_disjoint_p3(big, 5), budget_error);
  CHECK_FALSE(contains_k_disjoint_p3(big, 6));  // 3k > n short-circuits the budget
}

TEST_CASE("max_colored_subgraph_oracle basics") {
  // K2 on {0,1}: S1 = {0,1} (one clique), S2 = {0}
  const Graph k2 = complete(2);
  const ColorTuple tuple{{{0, 1}, {0}}};
  const std::vector<Rational> unit(2, 1);
  const ColorLists full{{1, 2}, {1, 2}};
  CHECK(max_colored_subgraph_oracle(k2, tuple, unit, full, 2) == 2);

  const ColorTuple empty_tuple{{{}, {}}};
  CHECK(max_colored_subgraph_oracle(k2, empty_tuple, unit, full, 2) == 0);

  const ColorTuple single{{{0}}};
  const ColorLists only_one{{1}, {}};
  std::vector<Rational> w{Rational(7, 2), Rational(1)};
  CHECK(max_colored_subgraph_oracle(k2, single, w, only_one, 2) == Rational(7, 2));
}
