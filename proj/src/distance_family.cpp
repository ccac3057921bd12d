#include "kp3/distance_family.hpp"

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

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const VertexSet& set, int label) {
  return std::binary_search(set.begin(), set.end(), label);
}

std::vector<VertexSet> lambda_run(const Graph& g, const VertexSet& forbidden, int k, int d);

// One recursion frame's cache: the subproblem of an anchor vertex u depends
// only on u (given this level's graph, F and d), so each anchor is solved at
// most once per level even though the P3 scan revisits it every iteration.
struct AnchorMemo {
  const Graph& g;
  const VertexSet& forbidden;
  int k;
  int d;
  std::map<int, std::vector<VertexSet>> families;

  const std::vector<VertexSet>& family_for(int anchor) {
    if (auto it = families.find(anchor); it != families.end()) return it->second;
    const VertexSet reachable = neighborhood_at_least(g, anchor, 4);
    const VertexSet band = intersect(reachable, neighborhood_at_most(g, anchor, d - 1));
    const VertexSet sub_forbidden = unite(intersect(forbidden, reachable), band);
    auto family = lambda_run(induced_subgraph(g, reachable), sub_forbidden, k - 1, d);
    // Locality: members must stay at distance >= d from the anchor.
    for (const VertexSet& member : family) {
      if (!intersect(member, band).empty()) {
        throw std::logic_error("lambda_k_d: recursive member violates the distance band");
      }
    }
    return families.emplace(anchor, std::move(family)).first->second;
  }
};

std::vector<VertexSet> lambda_run(const Graph& g, const VertexSet& forbidden, int k, int d) {
  const int n = g.vertex_count();
  std::vector<VertexSet> family{VertexSet{}};
  AnchorMemo memo{g, forbidden, k, d, {}};

  // Vertices lying on at least one induced P3 of the whole graph. The prefix
  // scan below cannot see P3s through vi whose other two vertices come later,
  // yet members already reach past the prefix (the recursion works in the
  // full graph), so vi must be anchored against full-graph P3s as well.
  VertexSet on_some_p3;
  if (k > 1) {
    for (const InducedP3& p3 : enumerate_induced_p3(g)) {
      on_some_p3.push_back(p3.endpoint_a);
      on_some_p3.push_back(p3.center);
      on_some_p3.push_back(p3.endpoint_b);
    }
    std::sort(on_some_p3.begin(), on_some_p3.end());
    on_some_p3.erase(std::unique(on_some_p3.begin(), on_some_p3.end()), on_some_p3.end());
  }

  VertexSet prefix;
  for (int i = 0; i < n; ++i) {
    const int vi = g.label_at(i);
    prefix.push_back(vi);
    if (contains(forbidden, vi)) continue;

    // Extend members while the extension keeps both properties in g. Members
    // spawned from recursive calls may already contain vi (no-op union).
    for (VertexSet& member : family) {
      if (std::binary_search(member.begin(), member.end(), vi)) continue;
      VertexSet grown = member;
      insert_sorted(grown, vi);
      if (is_p3_free(induced_subgraph(g, grown)) && components_pairwise_far(g, grown, d)) {
        member = std::move(grown);
      }
    }

    std::vector<VertexSet> added;
    if (k > 1) {
      const Graph prefix_graph = induced_subgraph(g, prefix);
      const auto p3s = enumerate_induced_p3(prefix_graph);

      // Endpoint pass, then center pass; the subproblem only depends on the
      // anchor, so gather the anchors of each pass and process them once.
      VertexSet anchors;
      for (const InducedP3& p3 : p3s) {
        if (!contains(forbidden, p3.endpoint_a)) anchors.push_back(p3.endpoint_a);
        if (!contains(forbidden, p3.endpoint_b)) anchors.push_back(p3.endpoint_b);
      }
      for (const InducedP3& p3 : p3s) {
        if (!contains(forbidden, p3.center)) anchors.push_back(p3.center);
      }
      if (contains(on_some_p3, vi)) anchors.push_back(vi);
      std::sort(anchors.begin(), anchors.end());
      anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

      for (int anchor : anchors) {
        for (const VertexSet& c : memo.family_for(anchor)) {
          VertexSet member = c;
          insert_sorted(member, anchor);
          added.push_back(std::move(member));
        }
      }
    }

    family.insert(family.end(), std::make_move_iterator(added.begin()),
                  std::make_move_iterator(added.end()));
    canonicalize(family);
  }

  return family;
}

}  // namespace

VertexFamily lambda_k_d(const Graph& g, const VertexSet& forbidden, int k, int d) {
  if (k < 1) throw std::invalid_argument("lambda_k_d: k must be >= 1");
  if (d < 6) {
    throw unsupported_distance_error("lambda_k_d: requires d >= 6, got d = " + std::to_string(d));
  }
  require_vertex_set(g, forbidden, "lambda_k_d");
  VertexFamily fam;
  fam.base = g;
  fam.kind = FamilyKind::AvoidingDistanceAmiable;
  fam.d = d;
  fam.forbidden = forbidden;
  fam.members = lambda_run(g, forbidden, k, d);
  return fam;
}

Verdict verify_distance_family(const Graph& g, const VertexSet& forbidden, int d,
                               const VertexFamily& fam, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices) {
    throw budget_error("verify_distance_family: graph exceeds the verification budget");
  }
  require_vertex_set(g, forbidden, "verify_distance_family");
  for (const VertexSet& member : fam.members) {
    for (int v : member) {
      if (!g.has_vertex(v)) {
        return {false, "member contains a vertex outside the graph", member};
      }
    }
    if (!intersect(member, forbidden).empty()) {
      return {false, "member intersects the forbidden set", member};
    }
    if (!is_p3_free(induced_subgraph(g, member))) {
      return {false, "member induces a P3", member};
    }
    if (!components_pairwise_far(g, member, d)) {
      return {false, "member has clique components at distance < d", member};
    }
  }

  VertexSet allowed;
  for (int v : g.labels()) {
    if (!contains(forbidden, v)) allowed.push_back(v);
  }
  const Graph restricted = induced_subgraph(power_graph(g, d), allowed);
  for (const VertexSet& independent : enumerate_maximal_independent_sets(restricted, budget)) {
    const bool covered = std::any_of(fam.members.begin(), fam.members.end(),
                                     [&](const VertexSet& member) {
                                       return std::includes(member.begin(), member.end(),
                                                            independent.begin(), independent.end());
                                     });
    if (!covered) {
      return {false, "maximal forbidden-avoiding distance-d independent set not covered",
              independent};
    }
  }
  return {};
}

}  // namespace kp3
