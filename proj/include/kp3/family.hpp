#pragma once

#include "kp3/graph.hpp"
#include "kp3/oracles.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kp3 {

enum class FamilyKind {
  Amiable,                  // members induce P3-free subgraphs, maximal
                            // independent sets covered
  AvoidingDistanceAmiable,  // additionally F-avoiding with clique components
                            // pairwise at distance >= d
};

/// A family of vertex subsets of a fixed base graph. Members are stored in
/// canonical form: each sorted ascending, the family sorted lexicographically,
/// no duplicates.
struct VertexFamily {
  Graph base;
  FamilyKind kind = FamilyKind::Amiable;
  int d = 2;
  VertexSet forbidden;  // empty unless kind is AvoidingDistanceAmiable
  std::vector<VertexSet> members;

  int size() const { return static_cast<int>(members.size()); }
};

/// 2^{k-1} * n^{4(k-1)}: the proven cap on the family size for n >= 1.
BigInt family_size_bound(int n, int k);

/// Test hook: receives the family state after each outer iteration of the
/// generator (top-level loop only, not recursive calls).
using FamilyObserver = std::function<void(int iteration, const std::vector<VertexSet>&)>;

/// Computes an amiable family of a kP3-free graph by the incremental
/// vertex-ordering construction: members grow one vertex at a time while they
/// stay P3-free, and every induced P3 through the new vertex spawns members
/// from a recursive call on the anti-neighborhood of the path.
///
/// The input graph is trusted to be kP3-free (validate separately with
/// contains_k_disjoint_p3 at desk scale); on other inputs the result carries
/// no coverage guarantee. The vertex ordering is label order, recursive calls
/// are memoized by their anti-neighborhood, and the output is deterministic.
/// Throws std::invalid_argument when k < 1.
VertexFamily gamma_k(const Graph& g, int k, const FamilyObserver& observer = nullptr);

struct Verdict {
  bool ok = true;
  std::string reason;  // empty when ok
  std::optional<VertexSet> counterexample;
};

/// Desk-scale check of the two amiable-family properties: every member
/// induces a P3-free subgraph, and every maximal independent set of g is
/// contained in some member. Throws budget_error above the size cap.
Verdict verify_amiable(const Graph& g, const VertexFamily& fam, const OracleBudget& budget = {});

}  // namespace kp3
