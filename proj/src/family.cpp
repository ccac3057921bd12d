#include "kp3/family.hpp"

#include "kp3/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace kp3 {

namespace {

void insert_sorted(VertexSet& set, int label) {
  set.insert(std::lower_bound(set.begin(), set.end(), label), label);
}

void canonicalize(std::vector<VertexSet>& members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

struct GammaContext {
  // (k, anti-neighborhood) -> family of the recursive call. All graphs in the
  // recursion are induced subgraphs of one root graph, so the vertex set
  // determines the subproblem.
  std::map<std::pair<int, VertexSet>, std::vector<VertexSet>> memo;
};

std::vector<VertexSet> gamma_run(const Graph& g, int k, GammaContext& ctx,
                                 const FamilyObserver& observer);

const std::vector<VertexSet>& gamma_recurse(const Graph& g, const VertexSet& anti, int k,
                                            GammaContext& ctx) {
  const auto key = std::make_pair(k, anti);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
  auto family = gamma_run(induced_subgraph(g, anti), k, ctx, nullptr);
  return ctx.memo.emplace(key, std::move(family)).first->second;
}

std::vector<VertexSet> gamma_run(const Graph& g, int k, GammaContext& ctx,
                                 const FamilyObserver& observer) {
  const int n = g.vertex_count();
  std::vector<VertexSet> family{VertexSet{}};

  for (int i = 0; i < n; ++i) {
    const int vi = g.label_at(i);

    // Extend members in place; the unextended copy is not retained. Members
    // spawned from recursive calls may already contain vi, in which case the
    // union is a no-op.
    for (VertexSet& member : family) {
      if (std::binary_search(member.begin(), member.end(), vi)) continue;
      VertexSet grown = member;
      insert_sorted(grown, vi);
      if (is_p3_free(induced_subgraph(g, grown))) member = std::move(grown);
    }

    std::vector<VertexSet> added;
    if (k > 1) {
      // P3s through vi are scanned over the whole graph, not only the prefix:
      // members already hold post-prefix vertices (anti-neighborhoods are
      // taken in the full graph), so the two-clique-components case can force
      // path partners beyond v_i. Restricting to the prefix provably loses
      // maximal independent sets.
      const Bits& vi_row = g.adjacency_row(i);
      VertexSet vi_neighbors;
      for (auto j = vi_row.find_first(); j != Bits::npos; j = vi_row.find_next(j)) {
        vi_neighbors.push_back(static_cast<int>(j));
      }

      const auto spawn = [&](int u_idx, int w_idx, bool vi_is_endpoint) {
        VertexSet path{vi, g.label_at(u_idx), g.label_at(w_idx)};
        std::sort(path.begin(), path.end());
        const VertexSet anti = anti_neighborhood(g, path);
        for (const VertexSet& c : gamma_recurse(g, anti, k - 1, ctx)) {
          VertexSet member = c;
          insert_sorted(member, vi);
          if (vi_is_endpoint) insert_sorted(member, g.label_at(w_idx));
          added.push_back(std::move(member));
        }
      };

      // P3s vi-u-w with vi an endpoint: u a neighbor of vi, w a neighbor of u
      // not adjacent to vi. The new member gains both endpoints.
      for (int u : vi_neighbors) {
        const Bits& u_row = g.adjacency_row(u);
        for (auto w = u_row.find_first(); w != Bits::npos; w = u_row.find_next(w)) {
          if (static_cast<int>(w) == i || vi_row.test(w)) continue;
          spawn(u, static_cast<int>(w), true);
        }
      }

      // P3s u-vi-w with vi the center: non-adjacent neighbor pairs.
      for (std::size_t a = 0; a < vi_neighbors.size(); ++a) {
        for (std::size_t b = a + 1; b < vi_neighbors.size(); ++b) {
          if (!g.adjacency_row(vi_neighbors[a]).test(vi_neighbors[b])) {
            spawn(vi_neighbors[a], vi_neighbors[b], false);
          }
        }
      }
    }

    family.insert(family.end(), std::make_move_iterator(added.begin()),
                  std::make_move_iterator(added.end()));
    canonicalize(family);
    if (observer) observer(i, family);
  }

  return family;
}

}  // namespace

BigInt family_size_bound(int n, int k) {
  BigInt bound = BigInt(1) << (k - 1);
  for (int e = 0; e < 4 * (k - 1); ++e) bound *= n;
  return bound;
}

VertexFamily gamma_k(const Graph& g, int k, const FamilyObserver& observer) {
  if (k < 1) throw std::invalid_argument("gamma_k: k must be >= 1");
  GammaContext ctx;
  VertexFamily fam;
  fam.base = g;
  fam.kind = FamilyKind::Amiable;
  fam.members = gamma_run(g, k, ctx, observer);
  return fam;
}

Verdict verify_amiable(const Graph& g, const VertexFamily& fam, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices) {
    throw budget_error("verify_amiable: graph exceeds the verification budget");
  }
  for (const VertexSet& member : fam.members) {
    for (int v : member) {
      if (!g.has_vertex(v)) {
        return {false, "member contains a vertex outside the graph", member};
      }
    }
    if (!is_p3_free(induced_subgraph(g, member))) {
      return {false, "member induces a P3", member};
    }
  }
  for (const VertexSet& independent : enumerate_maximal_independent_sets(g, budget)) {
    const bool covered = std::any_of(fam.members.begin(), fam.members.end(),
                                     [&](const VertexSet& member) {
                                       return std::includes(member.begin(), member.end(),
                                                            independent.begin(), independent.end());
                                     });
    if (!covered) {
      return {false, "maximal independent set not contained in any member", independent};
    }
  }
  return {};
}

}  // namespace kp3
