#include "kp3/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace kp3 {

namespace {

void check_sorted_unique(const VertexSet& s, const char* what) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) {
      throw std::invalid_argument(std::string(what) + ": vertex set must be sorted and duplicate-free");
    }
  }
}

}  // namespace

Graph::Graph() : distances_(std::make_shared<DistanceCache>()) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  VertexSet labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  *this = with_labels(std::move(labels), edges);
}

Graph Graph::with_labels(VertexSet labels, const std::vector<std::pair<int, int>>& edges) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (!labels.empty() && labels.front() < 0) {
    throw std::invalid_argument("Graph: negative vertex label");
  }

  Graph g;
  g.labels_ = std::move(labels);
  const int n = g.vertex_count();
  const int max_label = n == 0 ? -1 : g.labels_.back();
  g.index_of_.assign(max_label + 1, -1);
  for (int i = 0; i < n; ++i) g.index_of_[g.labels_[i]] = i;
  g.adj_.assign(n, Bits(n));
  for (const auto& [u, v] : edges) {
    const int iu = g.index_of(u);
    const int iv = g.index_of(v);
    if (iu == iv) throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(u));
    g.adj_[iu].set(iv);
    g.adj_[iv].set(iu);
  }
  return g;
}

bool Graph::has_vertex(int label) const {
  return label >= 0 && label < static_cast<int>(index_of_.size()) && index_of_[label] >= 0;
}

int Graph::index_of(int label) const {
  if (!has_vertex(label)) {
    throw std::invalid_argument("vertex " + std::to_string(label) + " is not in the graph");
  }
  return index_of_[label];
}

bool Graph::adjacent(int u, int v) const { return adj_[index_of(u)].test(index_of(v)); }

VertexSet Graph::neighbors(int label) const {
  const Bits& row = adj_[index_of(label)];
  VertexSet out;
  for (auto i = row.find_first(); i != Bits::npos; i = row.find_next(i)) {
    out.push_back(labels_[i]);
  }
  return out;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (const Bits& row : adj_) twice += static_cast<long long>(row.count());
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  const int n = vertex_count();
  for (int i = 0; i < n; ++i) {
    for (auto j = adj_[i].find_next(i); j != Bits::npos; j = adj_[i].find_next(j)) {
      out.emplace_back(labels_[i], labels_[j]);
    }
  }
  return out;
}

void Graph::ensure_distances() const {
  std::call_once(distances_->once, [this] {
    const int n = vertex_count();
    auto& table = distances_->table;
    table.assign(n, std::vector<int>(n, -1));
    std::deque<int> queue;
    for (int source = 0; source < n; ++source) {
      auto& dist = table[source];
      dist[source] = 0;
      queue.clear();
      queue.push_back(source);
      while (!queue.empty()) {
        const int at = queue.front();
        queue.pop_front();
        const Bits& row = adj_[at];
        for (auto next = row.find_first(); next != Bits::npos; next = row.find_next(next)) {
          if (dist[next] < 0) {
            dist[next] = dist[at] + 1;
            queue.push_back(static_cast<int>(next));
          }
        }
      }
    }
  });
}

int Graph::dist_at(int index_u, int index_v) const {
  ensure_distances();
  return distances_->table[index_u][index_v];
}

std::optional<int> Graph::distance(int u, int v) const {
  const int d = dist_at(index_of(u), index_of(v));
  if (d < 0) return std::nullopt;
  return d;
}

void require_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
  check_sorted_unique(s, what);
  for (int label : s) {
    if (!g.has_vertex(label)) {
      throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(label) +
                                  " is not in the graph");
    }
  }
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_vertex_set(g, s, "induced_subgraph");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Bits& row = g.adjacency_row(g.index_of(s[a]));
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (row.test(g.index_of(s[b]))) edges.emplace_back(s[a], s[b]);
    }
  }
  return Graph::with_labels(s, edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> components;
  Bits seen(n);
  std::deque<int> queue;
  for (int start = 0; start < n; ++start) {
    if (seen.test(start)) continue;
    VertexSet component;
    seen.set(start);
    queue.clear();
    queue.push_back(start);
    while (!queue.empty()) {
      const int at = queue.front();
      queue.pop_front();
      component.push_back(g.label_at(at));
      const Bits& row = g.adjacency_row(at);
      for (auto next = row.find_first(); next != Bits::npos; next = row.find_next(next)) {
        if (!seen.test(next)) {
          seen.set(next);
          queue.push_back(static_cast<int>(next));
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::map<int, std::optional<int>> distances_from(const Graph& g, int v) {
  const int iv = g.index_of(v);
  std::map<int, std::optional<int>> out;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const int d = g.dist_at(iv, i);
    out[g.label_at(i)] = d < 0 ? std::nullopt : std::optional<int>(d);
  }
  return out;
}

VertexSet neighborhood_at_least(const Graph& g, int v, int d) {
  if (d < 0) throw std::invalid_argument("neighborhood_at_least: d must be >= 0");
  const int iv = g.index_of(v);
  VertexSet out;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const int dist = g.dist_at(iv, i);
    if (dist < 0 || dist >= d) out.push_back(g.label_at(i));
  }
  return out;
}

VertexSet neighborhood_at_most(const Graph& g, int v, int d) {
  if (d < 0) throw std::invalid_argument("neighborhood_at_most: d must be >= 0");
  const int iv = g.index_of(v);
  VertexSet out;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i == iv) continue;
    const int dist = g.dist_at(iv, i);
    if (dist >= 1 && dist <= d) out.push_back(g.label_at(i));
  }
  return out;
}

VertexSet anti_neighborhood(const Graph& g, const VertexSet& x) {
  require_vertex_set(g, x, "anti_neighborhood");
  const int n = g.vertex_count();
  Bits excluded(n);
  for (int label : x) {
    const int i = g.index_of(label);
    excluded.set(i);
    excluded |= g.adjacency_row(i);
  }
  VertexSet out;
  for (int i = 0; i < n; ++i) {
    if (!excluded.test(i)) out.push_back(g.label_at(i));
  }
  return out;
}

bool is_p3_free(const Graph& g) {
  const int n = g.vertex_count();
  Bits seen(n);
  std::deque<int> queue;
  for (int start = 0; start < n; ++start) {
    if (seen.test(start)) continue;
    Bits component(n);
    component.set(start);
    seen.set(start);
    queue.clear();
    queue.push_back(start);
    while (!queue.empty()) {
      const int at = queue.front();
      queue.pop_front();
      const Bits& row = g.adjacency_row(at);
      for (auto next = row.find_first(); next != Bits::npos; next = row.find_next(next)) {
        if (!seen.test(next)) {
          seen.set(next);
          component.set(next);
          queue.push_back(static_cast<int>(next));
        }
      }
    }
    const std::size_t size = component.count();
    for (auto i = component.find_first(); i != Bits::npos; i = component.find_next(i)) {
      if ((g.adjacency_row(static_cast<int>(i)) & component).count() != size - 1) return false;
    }
  }
  return true;
}

std::vector<InducedP3> enumerate_induced_p3(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<InducedP3> out;
  for (int c = 0; c < n; ++c) {
    const Bits& row = g.adjacency_row(c);
    for (auto a = row.find_first(); a != Bits::npos; a = row.find_next(a)) {
      for (auto b = row.find_next(a); b != Bits::npos; b = row.find_next(b)) {
        if (!g.adjacency_row(static_cast<int>(a)).test(b)) {
          out.push_back({g.label_at(static_cast<int>(a)), g.label_at(c),
                         g.label_at(static_cast<int>(b))});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const InducedP3& x, const InducedP3& y) {
    return std::tie(x.center, x.endpoint_a, x.endpoint_b) <
           std::tie(y.center, y.endpoint_a, y.endpoint_b);
  });
  return out;
}

bool components_pairwise_far(const Graph& g, const VertexSet& s, int d) {
  require_vertex_set(g, s, "components_pairwise_far");
  const auto components = connected_components(induced_subgraph(g, s));
  for (std::size_t a = 0; a < components.size(); ++a) {
    for (std::size_t b = a + 1; b < components.size(); ++b) {
      for (int u : components[a]) {
        const int iu = g.index_of(u);
        for (int v : components[b]) {
          const int dist = g.dist_at(iu, g.index_of(v));
          if (dist >= 0 && dist < d) return false;
        }
      }
    }
  }
  return true;
}

bool is_distance_d_independent(const Graph& g, const VertexSet& s, int d) {
  require_vertex_set(g, s, "is_distance_d_independent");
  for (std::size_t a = 0; a < s.size(); ++a) {
    const int ia = g.index_of(s[a]);
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const int dist = g.dist_at(ia, g.index_of(s[b]));
      if (dist >= 0 && dist < d) return false;
    }
  }
  return true;
}

Graph power_graph(const Graph& g, int d) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int dist = g.dist_at(i, j);
      if (dist >= 1 && dist <= d - 1) edges.emplace_back(g.label_at(i), g.label_at(j));
    }
  }
  return Graph::with_labels(g.labels(), edges);
}

}  // namespace kp3
