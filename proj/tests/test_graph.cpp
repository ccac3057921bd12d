#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kp3/graph.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <set>
#include <thread>

using namespace kp3;
using namespace kp3::testutil;

namespace {

// Independent reference for the induced-P3 count: scan all vertex triples.
std::vector<InducedP3> p3_by_triple_scan(const Graph& g) {
  std::vector<InducedP3> out;
  const auto& labels = g.labels();
  for (std::size_t x = 0; x < labels.size(); ++x) {
    for (std::size_t y = x + 1; y < labels.size(); ++y) {
      for (std::size_t z = y + 1; z < labels.size(); ++z) {
        const int a = labels[x], b = labels[y], c = labels[z];
        const int ab = g.adjacent(a, b), ac = g.adjacent(a, c), bc = g.adjacent(b, c);
        if (ab + ac + bc != 2) continue;
        if (!ab) out.push_back({std::min(a, b), c, std::max(a, b)});
        else if (!ac) out.push_back({std::min(a, c), b, std::max(a, c)});
        else out.push_back({std::min(b, c), a, std::max(b, c)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const InducedP3& l, const InducedP3& r) {
    return std::tie(l.center, l.endpoint_a, l.endpoint_b) <
           std::tie(r.center, r.endpoint_a, r.endpoint_b);
  });
  return out;
}

}  // namespace

TEST_CASE("induced subgraph keeps host labels") {
  const Graph g = path(4);                       // 0-1-2-3
  const Graph sub = induced_subgraph(g, {0, 1, 3});
  CHECK(sub.labels() == VertexSet{0, 1, 3});
  CHECK(sub.edges() == std::vector<std::pair<int, int>>{{0, 1}});

  CHECK(induced_subgraph(g, {}).vertex_count() == 0);

  const Graph c5 = cycle(5);
  const Graph same = induced_subgraph(c5, {0, 1, 2, 3, 4});
  CHECK(same.edges() == c5.edges());

  CHECK_THROWS_AS(induced_subgraph(g, {0, 9}), std::invalid_argument);
}

TEST_CASE("connected components in smallest-label order") {
  const auto two_triangles = connected_components(cliques({3, 3}));
  REQUIRE(two_triangles.size() == 2);
  CHECK(two_triangles[0] == VertexSet{0, 1, 2});
  CHECK(two_triangles[1] == VertexSet{3, 4, 5});

  CHECK(connected_components(Graph()).empty());
  CHECK(connected_components(path(5)) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
}

TEST_CASE("distances from a vertex") {
  const auto d = distances_from(path(4), 0);
  CHECK(d.at(0) == 0);
  CHECK(d.at(1) == 1);
  CHECK(d.at(2) == 2);
  CHECK(d.at(3) == 3);

  const Graph k2_k1(3, {{0, 1}});
  CHECK_FALSE(distances_from(k2_k1, 0).at(2).has_value());

  CHECK(distances_from(cycle(6), 0).at(3) == 3);
  CHECK_THROWS_AS(distances_from(path(3), 7), std::invalid_argument);
}

TEST_CASE("distance-band neighborhoods") {
  CHECK(neighborhood_at_least(path(5), 0, 4) == VertexSet{4});
  CHECK(neighborhood_at_least(complete(3), 0, 2) == VertexSet{});
  // unreachable counts as >= d
  CHECK(neighborhood_at_least(Graph(3, {{0, 1}}), 0, 4) == VertexSet{2});

  CHECK(neighborhood_at_most(path(5), 0, 2) == VertexSet{1, 2});
  CHECK(neighborhood_at_most(path(5), 0, 0) == VertexSet{});
  CHECK(neighborhood_at_most(cycle(5), 0, 2) == VertexSet{1, 2, 3, 4});
}

TEST_CASE("neighborhood bands partition the vertex set") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(9, 300, seed);
    for (int v = 0; v < 9; v += 3) {
      for (int d = 1; d <= 5; ++d) {
        const VertexSet far = neighborhood_at_least(g, v, d);
        const VertexSet near = neighborhood_at_most(g, v, d - 1);
        std::set<int> all(far.begin(), far.end());
        for (int u : near) CHECK(all.insert(u).second);
        CHECK(all.insert(v).second);
        CHECK(all.size() == 9);
      }
    }
  }
}

TEST_CASE("anti-neighborhood") {
  CHECK(anti_neighborhood(path(5), {0, 1, 2}) == VertexSet{4});
  CHECK(anti_neighborhood(complete(4), {0}) == VertexSet{});
  const Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(anti_neighborhood(two_edges, {0}) == VertexSet{2, 3});
}

TEST_CASE("anti-neighborhood equals complement of closed neighborhoods") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(8, 400, seed + 100);
    const VertexSet x{1, 4, 6};
    std::set<int> excluded(x.begin(), x.end());
    for (int v : x) {
      for (int u : g.neighbors(v)) excluded.insert(u);
    }
    VertexSet expected;
    for (int v : g.labels()) {
      if (!excluded.count(v)) expected.push_back(v);
    }
    CHECK(anti_neighborhood(g, x) == expected);
  }
}

TEST_CASE("P3-freeness") {
  CHECK(is_p3_free(cliques({3, 2})));
  CHECK_FALSE(is_p3_free(path(3)));
  CHECK_FALSE(is_p3_free(cycle(5)));
  CHECK(is_p3_free(Graph()));
}

TEST_CASE("induced P3 enumeration") {
  CHECK(enumerate_induced_p3(path(4)).size() == 2);
  CHECK(enumerate_induced_p3(complete(4)).empty());

  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto found = enumerate_induced_p3(star);
  CHECK(found.size() == 3);
  CHECK(found == p3_by_triple_scan(star));
}

TEST_CASE("P3-freeness agrees with P3 enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(8, static_cast<int>(100 + 80 * (seed % 10)), seed + 300);
    const auto p3s = enumerate_induced_p3(g);
    CHECK(is_p3_free(g) == p3s.empty());
    CHECK(p3s == p3_by_triple_scan(g));
  }
}

TEST_CASE("components pairwise far") {
  CHECK(components_pairwise_far(path(7), {0, 6}, 6));
  CHECK_FALSE(components_pairwise_far(path(7), {0, 5}, 6));
  const Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(components_pairwise_far(two_edges, {0, 1, 2, 3}, 100));
}

TEST_CASE("distance-d independence") {
  CHECK(is_distance_d_independent(cycle(5), {0, 2}, 2));
  CHECK_FALSE(is_distance_d_independent(cycle(5), {0, 1}, 2));
  CHECK(is_distance_d_independent(path(7), {0, 6}, 6));
}

TEST_CASE("power graph") {
  const Graph g = random_graph(7, 350, 42);
  CHECK(power_graph(g, 2).edges() == g.edges());

  // all-pairs distances of P4 by hand: the d=3 power joins pairs at distance <= 2
  CHECK(power_graph(path(4), 3).edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});

  CHECK(power_graph(Graph(2, {}), 9).edges().empty());
}

TEST_CASE("distance-d independence matches independence in the power graph") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_graph(8, 250, seed + 900);
    for (int d = 2; d <= 7; ++d) {
      const Graph p = power_graph(g, d);
      SplitMix64 rng(seed * 31 + d);
      for (int trial = 0; trial < 10; ++trial) {
        VertexSet s;
        for (int v = 0; v < 8; ++v) {
          if (rng.chance(300)) s.push_back(v);
        }
        bool independent = true;
        for (std::size_t a = 0; a < s.size() && independent; ++a) {
          for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (p.adjacent(s[a], s[b])) {
              independent = false;
              break;
            }
          }
        }
        CHECK(is_distance_d_independent(g, s, d) == independent);
      }
    }
  }
}

TEST_CASE("distance symmetry on random graphs") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = random_graph(9, 200, seed + 1234);
    for (int u = 0; u < 9; ++u) {
      for (int v = u + 1; v < 9; ++v) {
        CHECK(g.distance(u, v) == g.distance(v, u));
      }
    }
  }
}

TEST_CASE("concurrent distance queries agree") {
  const Graph g = random_graph(40, 150, 99);
  std::vector<std::vector<std::optional<int>>> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (int u = 0; u < 40; ++u) {
        for (int v = 0; v < 40; ++v) results[t].push_back(g.distance(u, v));
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
  const Graph dup(3, {{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
}
