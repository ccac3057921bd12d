#pragma once

#include "kp3/graph.hpp"
#include "kp3/instance.hpp"
#include "kp3/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace kp3 {

/// An ordered r-tuple (S_1,...,S_r) of vertex sets, one per color 1..r.
/// Valid tuples have each part inducing a P3-free subgraph whose clique
/// components are pairwise at distance >= d in the host graph; this is
/// trusted, not enforced (tuples come out of a family generator).
struct ColorTuple {
  std::vector<VertexSet> parts;

  int color_count() const { return static_cast<int>(parts.size()); }
};

/// Removes from each part the vertices whose list excludes that part's color.
ColorTuple preprocess_tuple(const ColorTuple& tuple, const ColorLists& lists);

/// One X-side node of the auxiliary bipartite graph: a clique component of
/// G[S_color], identified by (color, component index), components ordered by
/// smallest label.
struct AuxSlot {
  int color = 0;       // 1-based
  int comp_index = 0;  // 0-based within the color
  VertexSet vertices;
};

/// The auxiliary weighted bipartite graph B of the matching reduction. The
/// Y side has one node per vertex of the union of the parts; there is an edge
/// y_v -- x_{S_i^j} exactly when v lies in component j of color i, and every
/// edge at y_v carries the weight w(v). Edges are ordered canonically by
/// (y index, slot index); matchings are canonicalized against that order.
struct AuxiliaryBipartiteGraph {
  std::vector<AuxSlot> slots;              // ordered by (color, comp_index)
  VertexSet y_vertices;                    // sorted labels
  std::vector<Rational> y_weights;         // aligned with y_vertices
  std::vector<std::vector<int>> y_slots;   // aligned; sorted slot ids

  int node_count() const { return static_cast<int>(slots.size() + y_vertices.size()); }
  long long edge_count() const;
};

/// Builds B from an already preprocessed tuple. `weights` is indexed by label.
AuxiliaryBipartiteGraph build_auxiliary(const Graph& g, const ColorTuple& tuple,
                                        const std::vector<Rational>& weights);

struct MatchedEdge {
  int vertex = -1;  // y-side label
  int slot = -1;    // index into AuxiliaryBipartiteGraph::slots

  friend bool operator==(const MatchedEdge&, const MatchedEdge&) = default;
};

struct Matching {
  std::vector<MatchedEdge> edges;  // pairwise node-disjoint, sorted by (vertex, slot)
  Rational total_weight = 0;
};

/// Exact maximum-weight matching of B. All weights must be nonnegative.
/// Among the optima, returns the one whose edge set is lexicographically
/// smallest in the canonical edge order (edges compared as ascending id
/// sequences, absent edges reading as +infinity), which makes the output
/// deterministic even in the presence of zero-weight vertices.
Matching max_weight_matching(const AuxiliaryBipartiteGraph& b);

/// An induced subgraph together with a witnessing coloring and exact weight.
struct ColoredSubgraph {
  VertexSet vertices;
  std::map<int, int> coloring;  // label -> color 1..r
  Rational weight = 0;
};

/// Reads a matching of the B built from `tuple` back into a colored subgraph:
/// matched y-vertices, each colored by its slot's color. Re-checks that the
/// color classes are pairwise at distance >= d in g and throws
/// std::logic_error otherwise.
ColoredSubgraph extract_solution(const Graph& g, const ColorTuple& tuple, const Matching& m,
                                 int d);

/// Independent validity check: list respect, class containment in the parts,
/// and pairwise distance >= d within every color class. Fills `why` with a
/// diagnostic when it fails.
bool check_colored_subgraph(const Graph& g, const ColorTuple& tuple, const ColorLists& lists,
                            int d, const ColoredSubgraph& h, std::string* why = nullptr);

}  // namespace kp3
