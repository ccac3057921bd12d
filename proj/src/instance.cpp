#include "kp3/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kp3 {

void validate_instance(const Instance& inst) {
  const int n = inst.graph.vertex_count();
  if (static_cast<int>(inst.weights.size()) != n) {
    throw std::invalid_argument("instance: weight table arity mismatch");
  }
  if (static_cast<int>(inst.lists.size()) != n) {
    throw std::invalid_argument("instance: list table arity mismatch");
  }
  if (inst.r < 1) throw std::invalid_argument("instance: r must be >= 1");
  if (inst.k < 1) throw std::invalid_argument("instance: k must be >= 1");
  if (inst.d < 2) throw std::invalid_argument("instance: d must be >= 2");
  for (int v = 0; v < n; ++v) {
    if (inst.weights[v] < 0) {
      throw std::invalid_argument("instance: negative weight on vertex " + std::to_string(v));
    }
    const auto& list = inst.lists[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] < 1 || list[i] > inst.r) {
        throw std::invalid_argument("instance: color outside {1.." + std::to_string(inst.r) +
                                    "} on vertex " + std::to_string(v));
      }
      if (i > 0 && list[i - 1] >= list[i]) {
        throw std::invalid_argument("instance: color list must be sorted and duplicate-free");
      }
    }
  }
}

Instance make_instance(Graph g, int r, int k, int d) {
  Instance inst;
  const int n = g.vertex_count();
  inst.graph = std::move(g);
  inst.weights.assign(n, Rational(1));
  std::vector<int> full(r);
  for (int c = 0; c < r; ++c) full[c] = c + 1;
  inst.lists.assign(n, full);
  inst.r = r;
  inst.k = k;
  inst.d = d;
  validate_instance(inst);
  return inst;
}

Rational total_weight(const Instance& inst) {
  Rational sum = 0;
  for (const Rational& w : inst.weights) sum += w;
  return sum;
}

}  // namespace kp3
