#pragma once

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace kp3 {

/// A set of vertex labels, kept sorted ascending and duplicate-free.
using VertexSet = std::vector<int>;

using Bits = boost::dynamic_bitset<>;

/// An induced path on three vertices, stored once in canonical form:
/// endpoint_a < endpoint_b, both adjacent to center and not to each other.
struct InducedP3 {
  int endpoint_a = -1;
  int center = -1;
  int endpoint_b = -1;

  friend bool operator==(const InducedP3&, const InducedP3&) = default;
};

/// Immutable simple undirected graph with stable integer vertex labels.
///
/// A graph freshly built from `n` and an edge list has labels 0..n-1; induced
/// subgraphs keep the labels of the host graph, so vertex sets computed on a
/// subgraph are directly meaningful in every ancestor graph. All queries are
/// read-only and safe to call concurrently; the all-pairs distance table is
/// computed once on demand under a std::once_flag.
class Graph {
 public:
  Graph();

  /// Labels 0..n-1. Edges are deduplicated; self-loops are rejected.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  /// Arbitrary label set (used by induced_subgraph). Labels are sorted.
  static Graph with_labels(VertexSet labels,
                           const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const VertexSet& labels() const { return labels_; }
  bool has_vertex(int label) const;
  bool adjacent(int u, int v) const;
  VertexSet neighbors(int label) const;
  long long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  /// Hop distance between two labels; nullopt when unreachable.
  std::optional<int> distance(int u, int v) const;

  // Index-level accessors for library internals. Labels are sorted, so index
  // order and label order agree. dist_at returns -1 for unreachable pairs;
  // that sentinel never leaves the library.
  int index_of(int label) const;  // throws std::invalid_argument when absent
  int label_at(int index) const { return labels_[index]; }
  const Bits& adjacency_row(int index) const { return adj_[index]; }
  int dist_at(int index_u, int index_v) const;

 private:
  VertexSet labels_;
  std::vector<int> index_of_;  // label -> index, -1 when absent
  std::vector<Bits> adj_;

  struct DistanceCache {
    std::once_flag once;
    std::vector<std::vector<int>> table;  // -1 = unreachable
  };
  std::shared_ptr<DistanceCache> distances_;

  void ensure_distances() const;
};

/// Throws std::invalid_argument unless every element of `s` is a label of `g`.
/// `s` must be sorted and duplicate-free.
void require_vertex_set(const Graph& g, const VertexSet& s, const char* what);

/// Subgraph induced by `s`; labels are preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Vertex sets of the maximal connected subgraphs, ordered by smallest label.
std::vector<VertexSet> connected_components(const Graph& g);

/// Exact hop counts from `v`; nullopt marks unreachable vertices.
std::map<int, std::optional<int>> distances_from(const Graph& g, int v);

/// N^{>=d}(v): vertices at distance at least d from v (unreachable included).
VertexSet neighborhood_at_least(const Graph& g, int v, int d);

/// N^{<=d}(v): vertices u != v with 1 <= dist(v,u) <= d.
VertexSet neighborhood_at_most(const Graph& g, int v, int d);

/// Vertices outside `x` with no neighbor in `x`.
VertexSet anti_neighborhood(const Graph& g, const VertexSet& x);

/// True iff every connected component is a clique.
bool is_p3_free(const Graph& g);

/// Every canonical induced P3 exactly once, ordered lexicographically by
/// (center, endpoint_a, endpoint_b).
std::vector<InducedP3> enumerate_induced_p3(const Graph& g);

/// True iff the components of g[s] are pairwise at distance >= d in g
/// (infinite distance qualifies).
bool components_pairwise_far(const Graph& g, const VertexSet& s, int d);

/// True iff all pairs in s are at distance >= d in g.
bool is_distance_d_independent(const Graph& g, const VertexSet& s, int d);

/// Same labels; u,v adjacent iff 1 <= dist_g(u,v) <= d-1. Independent sets of
/// the result are exactly the distance-d independent sets of g.
Graph power_graph(const Graph& g, int d);

}  // namespace kp3
