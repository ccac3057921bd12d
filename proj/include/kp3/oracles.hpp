#pragma once

#include "kp3/graph.hpp"
#include "kp3/instance.hpp"
#include "kp3/matching.hpp"
#include "kp3/rational.hpp"

#include <vector>

namespace kp3 {

/// Caps for the exhaustive reference routines. Exceeding a cap raises
/// budget_error; the oracles never silently truncate.
struct OracleBudget {
  int max_vertices = 16;
  long long max_sets = 2'000'000;
};

/// Max over all F subseteq V of w(F) such that G[F] admits a coloring
/// respecting the lists, by subset enumeration plus backtracking
/// colorability. Shares no code with the solver pipeline.
Rational brute_mwlcis(const Instance& inst, const OracleBudget& budget = {});

/// Min over all T with G - T bipartite of w(T); bipartiteness by 2-coloring.
Rational brute_oct(const Graph& g, const std::vector<Rational>& weights,
                   const OracleBudget& budget = {});

/// Max-weight independent set of power_graph(g, d) by subset enumeration.
/// At d = 2 this is the classical brute-force MWIS.
Rational brute_distance_mwis(const Graph& g, const std::vector<Rational>& weights, int d,
                             const OracleBudget& budget = {});

/// Backtracking proper list coloring of power_graph(g, d).
bool brute_list_dr_coloring(const Instance& inst, const OracleBudget& budget = {});

/// All maximal independent sets, each exactly once, in lexicographic order
/// (Bron-Kerbosch with pivoting on the complement graph).
std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g,
                                                          const OracleBudget& budget = {});

/// True iff g contains k vertex-disjoint, pairwise anticomplete induced P3s.
/// Trivially false when 3k > |V(g)| regardless of budget.
bool contains_k_disjoint_p3(const Graph& g, int k, const OracleBudget& budget = {});

/// Brute-force maximum of w(V(H)) over induced subgraphs H of G[union S_i]
/// that admit a (d,r)-coloring phi with phi(v) in L(v) and each class i inside
/// S_i. The independent reference for the matching reduction.
Rational max_colored_subgraph_oracle(const Graph& g, const ColorTuple& tuple,
                                     const std::vector<Rational>& weights,
                                     const ColorLists& lists, int d,
                                     const OracleBudget& budget = {});

}  // namespace kp3
