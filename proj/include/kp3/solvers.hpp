#pragma once

#include "kp3/distance_family.hpp"
#include "kp3/family.hpp"
#include "kp3/instance.hpp"
#include "kp3/matching.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kp3 {

enum class CertificateKind { Mwlcis, Oct, Mwis, Dsis, LdrDecision };

/// A solver answer: the selected vertex set, a witnessing coloring when the
/// problem has one, and the exact total weight of `chosen`. For Oct the
/// coloring is the proper 2-coloring of the complement of `chosen`; for
/// LdrDecision `decision_yes` carries the answer and the coloring covers the
/// whole graph on yes.
struct Solution {
  CertificateKind kind = CertificateKind::Mwlcis;
  VertexSet chosen;
  std::optional<std::map<int, int>> coloring;
  Rational weight = 0;
  bool decision_yes = false;
};

struct SolveOptions {
  int jobs = 1;  // tuple-level worker threads; the result does not depend on it
};

/// Max-Weight List r-Colorable Induced Subgraph on a kP3-free graph with
/// d == 2: amiable family, then one exact matching problem per r-tuple of
/// members, maximum taken over tuples (ties broken by the lexicographically
/// first tuple). Throws std::invalid_argument when d != 2 or r < 1.
Solution solve_mwlcis(const Instance& inst, const SolveOptions& opts = {});

/// Minimum-weight odd cycle transversal: the complement of the best
/// 2-colorable induced subgraph. The kept part is re-checked bipartite.
Solution solve_oct(const Graph& g, const std::vector<Rational>& weights, int k,
                   const SolveOptions& opts = {});

/// Max-weight independent set, solved directly on the amiable family: inside
/// a member the graph is a disjoint union of cliques, so the best choice is
/// the heaviest vertex of every clique.
Solution solve_mwis(const Graph& g, const std::vector<Rational>& weights, int k,
                    const SolveOptions& opts = {});

/// Max-weight distance-d independent set for d >= 6, via the distance-d
/// family. Throws unsupported_distance_error when d < 6.
Solution solve_distance_d_mwis(const Graph& g, const std::vector<Rational>& weights, int k,
                               int d, const SolveOptions& opts = {});

/// List (d,r)-coloring decision for d >= 6: yes iff some tuple's maximum-size
/// colored subgraph covers the whole vertex set. Yes answers carry the
/// witnessing coloring. Throws unsupported_distance_error when d < 6.
Solution solve_list_dr_coloring(const Instance& inst, const SolveOptions& opts = {});

/// Independent validity check of a claimed solution against an instance:
/// recomputes the weight and verifies the per-kind certificate (coloring
/// validity, independence, bipartiteness of the kept part, ...).
bool check_solution(const Instance& inst, const Solution& sol, std::string* why = nullptr);

}  // namespace kp3
