#pragma once

#include "kp3/graph.hpp"
#include "kp3/rational.hpp"

#include <vector>

namespace kp3 {

/// Per-vertex admissible colors, indexed by label; each list is a sorted
/// subset of {1..r}. An empty list means the vertex can never be colored.
using ColorLists = std::vector<std::vector<int>>;

/// A problem instance: a dense-labeled graph plus exact nonnegative vertex
/// weights, color lists, and the parameters r, k, d. Solvers require d == 2
/// (classical problems) or d >= 6 (distance problems); the parser is
/// deliberately more permissive so that out-of-range instances can be loaded
/// and rejected with a precondition error instead of failing to parse.
struct Instance {
  Graph graph;
  std::vector<Rational> weights;  // by label, size == vertex count
  ColorLists lists;               // by label, size == vertex count
  int r = 1;
  int k = 1;
  int d = 2;
};

/// Structural checks: weight/list arity, nonnegative weights, lists within
/// {1..r}, k >= 1, d >= 2. Throws std::invalid_argument on violation.
void validate_instance(const Instance& inst);

/// Convenience: an instance over `g` with unit weights and full lists.
Instance make_instance(Graph g, int r, int k, int d);

Rational total_weight(const Instance& inst);

}  // namespace kp3
