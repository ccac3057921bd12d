#include "kp3/solvers.hpp"

#include "kp3/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace kp3 {

namespace {

void require_dense_labels(const Graph& g, const char* what) {
  const int n = g.vertex_count();
  if (n > 0 && g.labels().back() != n - 1) {
    throw std::invalid_argument(std::string(what) + ": solver instances use dense labels 0..n-1");
  }
}

// ---- scaled integer weights -------------------------------------------------
//
// All weights are cleared to integers by the lcm of their denominators; the
// tuple scan then runs entirely in exact integer arithmetic and the final
// value is divided back out.

struct ScaledWeights {
  BigInt denom = 1;
  std::vector<BigInt> by_label;
};

ScaledWeights scale_weights(const std::vector<Rational>& weights) {
  ScaledWeights s;
  for (const Rational& w : weights) {
    s.denom = boost::multiprecision::lcm(s.denom, BigInt(boost::multiprecision::denominator(w)));
  }
  s.by_label.reserve(weights.size());
  for (const Rational& w : weights) {
    s.by_label.push_back(BigInt(boost::multiprecision::numerator(w)) *
                         (s.denom / BigInt(boost::multiprecision::denominator(w))));
  }
  return s;
}

long long clamp_to_int64(const BigInt& value) {
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (value >= hi) return std::numeric_limits<long long>::max();
  return static_cast<long long>(value);
}

// ---- per-(member, color) preprocessed parts ---------------------------------

struct PartData {
  VertexSet verts;                  // member filtered by the color's lists
  std::vector<std::uint64_t> mask;  // bitset over labels
  std::vector<int> slot_of;         // label -> local clique-component id, -1 outside
  int slot_count = 0;
  BigInt ub = 0;                    // sum over components of the heaviest vertex
};

PartData build_part(const Graph& g, const VertexSet& member, int color, const ColorLists& lists,
                    const ScaledWeights& scaled, int n, int words) {
  PartData part;
  for (int v : member) {
    const auto& list = lists[v];
    if (std::binary_search(list.begin(), list.end(), color)) part.verts.push_back(v);
  }
  part.mask.assign(words, 0);
  for (int v : part.verts) part.mask[v / 64] |= 1ULL << (v % 64);
  part.slot_of.assign(n, -1);
  const auto components = connected_components(induced_subgraph(g, part.verts));
  part.slot_count = static_cast<int>(components.size());
  for (std::size_t j = 0; j < components.size(); ++j) {
    BigInt comp_max = 0;
    for (int v : components[j]) {
      part.slot_of[v] = static_cast<int>(j);
      comp_max = std::max(comp_max, scaled.by_label[v]);
    }
    part.ub += comp_max;
  }
  return part;
}

// ---- the tuple scan ----------------------------------------------------------

struct ScanInputs {
  const Graph* g = nullptr;
  int r = 0;
  int member_count = 0;
  int n = 0;
  int words = 0;
  const std::vector<std::vector<PartData>>* parts = nullptr;  // [color][member]
  std::vector<BigInt> suffix_ub;        // [color]: sum of per-color max ub from color on
  std::vector<int> vertex_order;        // labels by (weight desc, label asc)
  const ScaledWeights* scaled = nullptr;
  std::vector<std::uint64_t> full_mask; // all n labels (cover prefilter)
  std::vector<std::vector<std::uint64_t>> color_any_mask;  // [color]: union over members
};

// Augmenting-path matcher over the chosen parts, scaled-integer weights.
// Matchable Y-subsets form a transversal matroid, so taking vertices in
// descending weight order and keeping whatever still augments is exact.
struct TupleEvaluator {
  const ScanInputs& in;
  std::vector<const PartData*> chosen;
  std::vector<int> offsets;
  std::vector<std::uint64_t> u_mask;
  std::vector<int> slot_match;   // slot -> label, -1 free
  std::vector<int> slot_stamp;
  int stamp = 0;

  explicit TupleEvaluator(const ScanInputs& in)
      : in(in), chosen(in.r, nullptr), offsets(in.r, 0), u_mask(in.words, 0) {}

  void select(const std::vector<int>& digits) {
    int total_slots = 0;
    for (int c = 0; c < in.r; ++c) {
      chosen[c] = &(*in.parts)[c][digits[c]];
      offsets[c] = total_slots;
      total_slots += chosen[c]->slot_count;
    }
    std::fill(u_mask.begin(), u_mask.end(), 0);
    for (int c = 0; c < in.r; ++c) {
      for (int w = 0; w < in.words; ++w) u_mask[w] |= chosen[c]->mask[w];
    }
    slot_match.assign(total_slots, -1);
    slot_stamp.assign(total_slots, 0);
    stamp = 0;
  }

  bool in_union(int label) const { return u_mask[label / 64] >> (label % 64) & 1; }

  bool augment(int label) {
    for (int c = 0; c < in.r; ++c) {
      const PartData& part = *chosen[c];
      if (!(part.mask[label / 64] >> (label % 64) & 1)) continue;
      const int slot = offsets[c] + part.slot_of[label];
      if (slot_stamp[slot] == stamp) continue;
      slot_stamp[slot] = stamp;
      if (slot_match[slot] < 0 || augment(slot_match[slot])) {
        slot_match[slot] = label;
        return true;
      }
    }
    return false;
  }

  BigInt max_weight() {
    BigInt total = 0;
    for (int label : in.vertex_order) {
      if (!in_union(label)) continue;
      ++stamp;
      if (augment(label)) total += in.scaled->by_label[label];
    }
    return total;
  }

  int max_cardinality() {
    int total = 0;
    for (int label : in.vertex_order) {
      if (!in_union(label)) continue;
      ++stamp;
      if (augment(label)) ++total;
    }
    return total;
  }
};

struct BestTuple {
  bool have = false;
  BigInt weight = 0;
  std::vector<int> digits;
};

// One worker's share of the lexicographic tuple scan for the weighted
// problems. Subtrees are pruned only when their upper bound is strictly
// below the best weight seen anywhere, so every tie survives and the final
// reduction (max weight, then smallest digit vector) is independent of the
// thread count.
void scan_weighted(const ScanInputs& in, int first_lo, int first_hi,
                   std::atomic<long long>& floor, BestTuple& best) {
  TupleEvaluator eval(in);
  std::vector<int> digits(in.r, 0);

  const std::function<void(int, BigInt)> descend = [&](int pos, BigInt prefix_ub) {
    const bool outer = pos == 0;
    const int lo = outer ? first_lo : 0;
    const int hi = outer ? first_hi : in.member_count;
    for (int m = lo; m < hi; ++m) {
      const PartData& part = (*in.parts)[pos][m];
      BigInt bound = prefix_ub + part.ub;
      if (pos + 1 < in.r) bound += in.suffix_ub[pos + 1];
      if (best.have && bound < best.weight) continue;
      if (bound < BigInt(floor.load(std::memory_order_relaxed))) continue;
      digits[pos] = m;
      if (pos + 1 == in.r) {
        eval.select(digits);
        const BigInt got = eval.max_weight();
        if (!best.have || got > best.weight) {
          best.have = true;
          best.weight = got;
          best.digits = digits;
          long long flat = clamp_to_int64(got);
          long long seen = floor.load(std::memory_order_relaxed);
          while (seen < flat &&
                 !floor.compare_exchange_weak(seen, flat, std::memory_order_relaxed)) {
          }
        }
      } else {
        descend(pos + 1, prefix_ub + part.ub);
      }
    }
  };
  descend(0, BigInt(0));
}

BestTuple run_weighted_scan(const ScanInputs& in, int jobs) {
  std::atomic<long long> floor{std::numeric_limits<long long>::min()};
  const int workers = std::max(1, std::min(jobs, in.member_count));
  std::vector<BestTuple> results(workers);
  if (workers == 1) {
    scan_weighted(in, 0, in.member_count, floor, results[0]);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (in.member_count + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(in.member_count, lo + chunk);
      pool.emplace_back(scan_weighted, std::cref(in), lo, hi, std::ref(floor),
                        std::ref(results[t]));
    }
    for (auto& th : pool) th.join();
  }
  BestTuple best;
  for (const BestTuple& candidate : results) {
    if (!candidate.have) continue;
    if (!best.have || candidate.weight > best.weight ||
        (candidate.weight == best.weight && candidate.digits < best.digits)) {
      best = candidate;
    }
  }
  if (!best.have) throw std::logic_error("tuple scan evaluated nothing");
  return best;
}

// Cover-decision scan (list (d,r)-coloring): find the lexicographically first
// tuple whose matching saturates every vertex. Flattened tuple indices give a
// cheap shared "best so far" for cross-thread pruning when they fit in 63
// bits; otherwise threads simply scan their full ranges.
struct CoverScanResult {
  bool found = false;
  std::vector<int> digits;
};

void scan_cover(const ScanInputs& in, int first_lo, int first_hi, bool flat_ok,
                const std::vector<unsigned long long>& flat_pow,
                std::atomic<unsigned long long>& best_flat, CoverScanResult& result) {
  TupleEvaluator eval(in);
  std::vector<int> digits(in.r, 0);
  std::vector<std::uint64_t> prefix_union(in.words, 0);

  const std::function<void(int, unsigned long long)> descend = [&](int pos,
                                                                   unsigned long long flat) {
    if (result.found) return;
    const bool outer = pos == 0;
    const int lo = outer ? first_lo : 0;
    const int hi = outer ? first_hi : in.member_count;
    for (int m = lo; m < hi && !result.found; ++m) {
      const unsigned long long sub_flat = flat + (flat_ok ? flat_pow[pos + 1] * m : 0);
      if (flat_ok && sub_flat >= best_flat.load(std::memory_order_relaxed)) {
        if (outer) break;
        return;  // everything deeper or later here is lexicographically worse
      }
      const PartData& part = (*in.parts)[pos][m];
      // cover prefilter: the remaining colors must be able to reach full
      std::vector<std::uint64_t> reach(in.words);
      bool can_cover = true;
      for (int w = 0; w < in.words; ++w) {
        reach[w] = prefix_union[w] | part.mask[w];
        for (int c = pos + 1; c < in.r; ++c) reach[w] |= in.color_any_mask[c][w];
        if (reach[w] != in.full_mask[w]) can_cover = false;
      }
      if (!can_cover) continue;
      digits[pos] = m;
      if (pos + 1 == in.r) {
        eval.select(digits);
        bool full_union = true;
        for (int w = 0; w < in.words; ++w) {
          if (eval.u_mask[w] != in.full_mask[w]) full_union = false;
        }
        if (full_union && eval.max_cardinality() == in.n) {
          result.found = true;
          result.digits = digits;
          if (flat_ok) {
            unsigned long long seen = best_flat.load(std::memory_order_relaxed);
            while (seen > sub_flat &&
                   !best_flat.compare_exchange_weak(seen, sub_flat, std::memory_order_relaxed)) {
            }
          }
          return;
        }
      } else {
        std::vector<std::uint64_t> saved = prefix_union;
        for (int w = 0; w < in.words; ++w) prefix_union[w] |= part.mask[w];
        descend(pos + 1, sub_flat);
        prefix_union = saved;
      }
    }
  };
  descend(0, 0ULL);
}

CoverScanResult run_cover_scan(const ScanInputs& in, int jobs) {
  const int workers = std::max(1, std::min(jobs, in.member_count));
  // flattened index = sum digits[c] * member_count^(r-1-c); pow[c] is the
  // weight of position c-1... pow[r] = 1.
  std::vector<unsigned long long> flat_pow(in.r + 1, 1);
  bool flat_ok = true;
  for (int c = in.r - 1; c >= 0; --c) {
    const unsigned long long next = flat_pow[c + 1] * static_cast<unsigned long long>(
                                        std::max(1, in.member_count));
    if (in.member_count > 0 &&
        next / static_cast<unsigned long long>(std::max(1, in.member_count)) !=
            flat_pow[c + 1]) {
      flat_ok = false;
      break;
    }
    flat_pow[c] = next;
    if (flat_pow[c] > (1ULL << 62)) {
      flat_ok = false;
      break;
    }
  }

  std::atomic<unsigned long long> best_flat{std::numeric_limits<unsigned long long>::max()};
  std::vector<CoverScanResult> results(workers);
  if (workers == 1) {
    scan_cover(in, 0, in.member_count, flat_ok, flat_pow, best_flat, results[0]);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (in.member_count + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(in.member_count, lo + chunk);
      pool.emplace_back(scan_cover, std::cref(in), lo, hi, flat_ok, std::cref(flat_pow),
                        std::ref(best_flat), std::ref(results[t]));
    }
    for (auto& th : pool) th.join();
  }
  CoverScanResult best;
  for (const CoverScanResult& candidate : results) {
    if (!candidate.found) continue;
    if (!best.found || candidate.digits < best.digits) best = candidate;
  }
  return best;
}

ScanInputs make_scan_inputs(const Graph& g, const std::vector<VertexSet>& members, int r,
                            const ColorLists& lists, const ScaledWeights& scaled,
                            std::vector<std::vector<PartData>>& parts_storage) {
  ScanInputs in;
  in.g = &g;
  in.r = r;
  in.member_count = static_cast<int>(members.size());
  in.n = g.vertex_count();
  in.words = (in.n + 63) / 64;

  parts_storage.assign(r, {});
  for (int c = 0; c < r; ++c) {
    parts_storage[c].reserve(members.size());
    for (const VertexSet& member : members) {
      parts_storage[c].push_back(build_part(g, member, c + 1, lists, scaled, in.n, in.words));
    }
  }
  in.parts = &parts_storage;

  in.suffix_ub.assign(r + 1, BigInt(0));
  for (int c = r - 1; c >= 0; --c) {
    BigInt color_max = 0;
    for (const PartData& part : parts_storage[c]) color_max = std::max(color_max, part.ub);
    in.suffix_ub[c] = in.suffix_ub[c + 1] + color_max;
  }

  in.vertex_order.resize(in.n);
  for (int v = 0; v < in.n; ++v) in.vertex_order[v] = v;
  std::stable_sort(in.vertex_order.begin(), in.vertex_order.end(), [&](int lhs, int rhs) {
    return scaled.by_label[lhs] > scaled.by_label[rhs];
  });

  in.scaled = &scaled;
  in.full_mask.assign(in.words, 0);
  for (int v = 0; v < in.n; ++v) in.full_mask[v / 64] |= 1ULL << (v % 64);
  in.color_any_mask.assign(r, std::vector<std::uint64_t>(in.words, 0));
  for (int c = 0; c < r; ++c) {
    for (const PartData& part : parts_storage[c]) {
      for (int w = 0; w < in.words; ++w) in.color_any_mask[c][w] |= part.mask[w];
    }
  }
  return in;
}

// Reconstructs the winning tuple through the public matching pipeline and
// cross-checks it against the scan's optimum.
Solution finish_colored_solution(const Instance& inst, const VertexFamily& fam,
                                 const std::vector<int>& digits, const Rational& expect_weight,
                                 CertificateKind kind) {
  ColorTuple tuple;
  for (int digit : digits) tuple.parts.push_back(fam.members[digit]);
  const ColorTuple pre = preprocess_tuple(tuple, inst.lists);
  const AuxiliaryBipartiteGraph b = build_auxiliary(inst.graph, pre, inst.weights);
  const Matching m = max_weight_matching(b);
  if (m.total_weight != expect_weight) {
    throw std::logic_error("solver: canonical matching disagrees with the tuple scan");
  }
  const ColoredSubgraph h = extract_solution(inst.graph, pre, m, inst.d);
  std::string why;
  if (!check_colored_subgraph(inst.graph, pre, inst.lists, inst.d, h, &why)) {
    throw std::logic_error("solver: colored subgraph failed validation: " + why);
  }
  Solution sol;
  sol.kind = kind;
  sol.chosen = h.vertices;
  sol.coloring = h.coloring;
  sol.weight = h.weight;
  return sol;
}

Solution best_member_selection(const Graph& g, const VertexFamily& fam,
                               const std::vector<Rational>& weights, CertificateKind kind) {
  // Inside a member every component is a clique: take its heaviest vertex
  // (smallest label on ties). Weights are nonnegative, so taking one vertex
  // per component is optimal.
  Solution best;
  best.kind = kind;
  bool have = false;
  for (const VertexSet& member : fam.members) {
    VertexSet chosen;
    Rational weight = 0;
    for (const VertexSet& component : connected_components(induced_subgraph(g, member))) {
      int pick = component.front();
      for (int v : component) {
        if (weights[v] > weights[pick]) pick = v;
      }
      chosen.push_back(pick);
      weight += weights[pick];
    }
    std::sort(chosen.begin(), chosen.end());
    if (!have || weight > best.weight) {
      have = true;
      best.chosen = std::move(chosen);
      best.weight = weight;
    }
  }
  return best;
}

}  // namespace

Solution solve_mwlcis(const Instance& inst, const SolveOptions& opts) {
  validate_instance(inst);
  require_dense_labels(inst.graph, "solve_mwlcis");
  if (inst.d != 2) {
    throw std::invalid_argument(
        "solve_mwlcis: requires d == 2 (use solve_list_dr_coloring for d >= 6)");
  }
  const VertexFamily fam = gamma_k(inst.graph, inst.k);
  const ScaledWeights scaled = scale_weights(inst.weights);
  std::vector<std::vector<PartData>> parts;
  const ScanInputs in = make_scan_inputs(inst.graph, fam.members, inst.r, inst.lists, scaled,
                                         parts);
  const BestTuple best = run_weighted_scan(in, opts.jobs);
  const Rational expect = Rational(best.weight) / Rational(scaled.denom);
  return finish_colored_solution(inst, fam, best.digits, expect, CertificateKind::Mwlcis);
}

Solution solve_oct(const Graph& g, const std::vector<Rational>& weights, int k,
                   const SolveOptions& opts) {
  require_dense_labels(g, "solve_oct");
  Instance sub = make_instance(g, 2, k, 2);
  sub.weights = weights;
  validate_instance(sub);
  const Solution kept = solve_mwlcis(sub, opts);

  Solution sol;
  sol.kind = CertificateKind::Oct;
  for (int v : g.labels()) {
    if (!std::binary_search(kept.chosen.begin(), kept.chosen.end(), v)) sol.chosen.push_back(v);
  }
  sol.weight = total_weight(sub) - kept.weight;
  sol.coloring = kept.coloring;

  // the kept part must be bipartite: its 2-coloring must be proper
  const Graph rest = induced_subgraph(g, kept.chosen);
  for (const auto& [u, v] : rest.edges()) {
    if (kept.coloring->at(u) == kept.coloring->at(v)) {
      throw std::logic_error("solve_oct: kept part is not bipartite");
    }
  }
  return sol;
}

Solution solve_mwis(const Graph& g, const std::vector<Rational>& weights, int k,
                    const SolveOptions&) {
  require_dense_labels(g, "solve_mwis");
  if (static_cast<int>(weights.size()) != g.vertex_count()) {
    throw std::invalid_argument("solve_mwis: weight table arity mismatch");
  }
  for (const Rational& w : weights) {
    if (w < 0) throw std::invalid_argument("solve_mwis: negative weight");
  }
  const VertexFamily fam = gamma_k(g, k);
  Solution sol = best_member_selection(g, fam, weights, CertificateKind::Mwis);
  if (!is_distance_d_independent(g, sol.chosen, 2)) {
    throw std::logic_error("solve_mwis: selection is not independent");
  }
  return sol;
}

Solution solve_distance_d_mwis(const Graph& g, const std::vector<Rational>& weights, int k,
                               int d, const SolveOptions&) {
  require_dense_labels(g, "solve_distance_d_mwis");
  if (d < 6) {
    throw unsupported_distance_error("solve_distance_d_mwis: requires d >= 6, got d = " +
                                     std::to_string(d));
  }
  if (static_cast<int>(weights.size()) != g.vertex_count()) {
    throw std::invalid_argument("solve_distance_d_mwis: weight table arity mismatch");
  }
  for (const Rational& w : weights) {
    if (w < 0) throw std::invalid_argument("solve_distance_d_mwis: negative weight");
  }
  const VertexFamily fam = lambda_k_d(g, {}, k, d);
  Solution sol = best_member_selection(g, fam, weights, CertificateKind::Dsis);
  if (!is_distance_d_independent(g, sol.chosen, d)) {
    throw std::logic_error("solve_distance_d_mwis: selection is not distance-d independent");
  }
  return sol;
}

Solution solve_list_dr_coloring(const Instance& inst, const SolveOptions& opts) {
  validate_instance(inst);
  require_dense_labels(inst.graph, "solve_list_dr_coloring");
  if (inst.d < 6) {
    throw unsupported_distance_error("solve_list_dr_coloring: requires d >= 6, got d = " +
                                     std::to_string(inst.d));
  }
  const VertexFamily fam = lambda_k_d(inst.graph, {}, inst.k, inst.d);

  // unit weights: maximum weight == maximum size
  std::vector<Rational> unit(inst.graph.vertex_count(), Rational(1));
  const ScaledWeights scaled = scale_weights(unit);
  std::vector<std::vector<PartData>> parts;
  const ScanInputs in = make_scan_inputs(inst.graph, fam.members, inst.r, inst.lists, scaled,
                                         parts);
  const CoverScanResult cover = run_cover_scan(in, opts.jobs);

  Solution sol;
  sol.kind = CertificateKind::LdrDecision;
  if (!cover.found) return sol;

  Instance unit_inst = inst;
  unit_inst.weights = unit;
  Solution colored = finish_colored_solution(unit_inst, fam, cover.digits,
                                             Rational(inst.graph.vertex_count()),
                                             CertificateKind::LdrDecision);
  if (colored.chosen != inst.graph.labels()) {
    throw std::logic_error("solve_list_dr_coloring: witness does not cover the graph");
  }
  sol.decision_yes = true;
  sol.chosen = colored.chosen;
  sol.coloring = colored.coloring;
  for (int v : sol.chosen) sol.weight += inst.weights[v];
  return sol;
}

bool check_solution(const Instance& inst, const Solution& sol, std::string* why) {
  const auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  const Graph& g = inst.graph;
  for (int v : sol.chosen) {
    if (!g.has_vertex(v)) return fail("chosen vertex outside the graph");
  }
  Rational weight = 0;
  for (int v : sol.chosen) weight += inst.weights[v];
  if (sol.kind != CertificateKind::LdrDecision || sol.decision_yes) {
    if (weight != sol.weight) return fail("weight does not match the chosen set");
  }

  const auto coloring_ok = [&](const VertexSet& domain, int d, bool respect_lists) {
    if (!sol.coloring) return false;
    const auto& phi = *sol.coloring;
    if (phi.size() != domain.size()) return false;
    for (int v : domain) {
      const auto it = phi.find(v);
      if (it == phi.end()) return false;
      if (it->second < 1 || it->second > std::max(inst.r, 2)) return false;
      if (respect_lists) {
        const auto& list = inst.lists[v];
        if (!std::binary_search(list.begin(), list.end(), it->second)) return false;
      }
    }
    for (std::size_t a = 0; a < domain.size(); ++a) {
      for (std::size_t b = a + 1; b < domain.size(); ++b) {
        if (phi.at(domain[a]) != phi.at(domain[b])) continue;
        const int dist = g.dist_at(g.index_of(domain[a]), g.index_of(domain[b]));
        if (dist >= 0 && dist < d) return false;
      }
    }
    return true;
  };

  switch (sol.kind) {
    case CertificateKind::Mwlcis:
      if (!coloring_ok(sol.chosen, inst.d, true)) return fail("invalid witnessing coloring");
      return true;
    case CertificateKind::Oct: {
      VertexSet kept;
      for (int v : g.labels()) {
        if (!std::binary_search(sol.chosen.begin(), sol.chosen.end(), v)) kept.push_back(v);
      }
      if (!coloring_ok(kept, 2, false)) return fail("kept part is not properly 2-colored");
      return true;
    }
    case CertificateKind::Mwis:
      if (!is_distance_d_independent(g, sol.chosen, 2)) return fail("not independent");
      return true;
    case CertificateKind::Dsis:
      if (!is_distance_d_independent(g, sol.chosen, inst.d)) {
        return fail("not distance-d independent");
      }
      return true;
    case CertificateKind::LdrDecision:
      if (!sol.decision_yes) return true;
      if (sol.chosen != g.labels()) return fail("yes answer does not cover the graph");
      if (!coloring_ok(sol.chosen, inst.d, true)) return fail("invalid witnessing coloring");
      return true;
  }
  return fail("unknown certificate kind");
}

}  // namespace kp3
