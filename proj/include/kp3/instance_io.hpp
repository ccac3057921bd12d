#pragma once

#include "kp3/instance.hpp"

#include <cstdint>
#include <string>

namespace kp3 {

/// Line-oriented instance format, DIMACS-compatible at its core. Vertex ids
/// are 1-based in files and 0-based in memory.
///
///   c <free text>           comment
///   p edge <n> <m>          header, exactly one, before any e/w/l line
///   param r|k|d <value>     problem parameters (defaults r=1, k=1, d=2)
///   e <u> <v>               edge; duplicates collapse, self-loops rejected
///   w <v> <p[/q]>           weight, exact nonnegative rational (default 1)
///   l <v> [c1 c2 ...]       color list (default full {1..r}; may be empty)
///
/// parse_instance throws parse_error (with a 1-based line number) on
/// malformed lines and on references to vertices outside 1..n.
Instance parse_instance(const std::string& text);

/// Canonical text: header, params, sorted edges, then only the non-default
/// weight and list lines. parse(serialize(x)) is structurally equal to x.
std::string serialize_instance(const Instance& inst);

enum class GeneratorMode { Rejection, Structured };

/// Seed-deterministic recipe for a kP3-free graph. density_permille drives
/// edge probability (rejection mode and the random block of structured mode).
struct GeneratorSpec {
  GeneratorMode mode = GeneratorMode::Structured;
  int n = 0;
  int k = 1;
  int density_permille = 500;
  std::uint64_t seed = 0;
  int retry_cap = 1000;  // rejection mode only
};

/// Structured mode: a disjoint union of an arbitrary random graph on at most
/// 3k-1 vertices (too small to hold k disjoint P3s) and a random cluster
/// graph; for k = 1 the cluster graph alone. kP3-free by construction for
/// any n. Rejection mode: Erdos-Renyi samples filtered through the
/// contains_k_disjoint_p3 oracle (desk scale only); throws generation_error
/// when retry_cap consecutive samples fail.
Graph generate_kp3_free(const GeneratorSpec& spec);

}  // namespace kp3
