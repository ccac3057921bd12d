#pragma once

#include "kp3/family.hpp"
#include "kp3/graph.hpp"
#include "kp3/oracles.hpp"

namespace kp3 {

/// Computes an F-avoiding distance-d amiable family of a kP3-free graph for
/// d >= 6: every member avoids `forbidden`, induces a P3-free subgraph whose
/// clique components are pairwise at distance >= d in g, and every maximal
/// F-avoiding distance-d independent set of g is contained in some member.
///
/// Unlike the d = 2 construction, each outer iteration scans the induced P3s
/// of the whole prefix graph, and the recursion steps into N^{>=4}(u) of the
/// anchor vertex u with the band N^{>=4}(u) cap N^{<=d-1}(u) added to the
/// forbidden set, which is what keeps the components of recursively found
/// members far apart at this level. Iterations whose vertex lies in F are
/// skipped entirely.
///
/// Throws unsupported_distance_error when d < 6 (the distance guarantee
/// genuinely fails for 3 <= d <= 5) and std::invalid_argument when k < 1 or
/// `forbidden` is not a vertex set of g. kP3-freeness is trusted.
VertexFamily lambda_k_d(const Graph& g, const VertexSet& forbidden, int k, int d);

/// Desk-scale check of the four defining properties: F-avoidance, member
/// P3-freeness, component distance >= d, and coverage of every maximal
/// F-avoiding distance-d independent set (enumerated on the power graph
/// restricted to V \ F). Throws budget_error above the size cap.
Verdict verify_distance_family(const Graph& g, const VertexSet& forbidden, int d,
                               const VertexFamily& fam, const OracleBudget& budget = {});

}  // namespace kp3
