#include "kp3/instance_io.hpp"

#include "kp3/errors.hpp"
#include "kp3/oracles.hpp"
#include "kp3/rng.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace kp3 {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

int parse_int(const std::string& token, int line_no, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw parse_error(std::string("expected ") + what + ", got '" + token + "'", line_no);
  }
  if (used != token.size()) {
    throw parse_error(std::string("expected ") + what + ", got '" + token + "'", line_no);
  }
  return value;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;

  bool have_header = false;
  int n = 0;
  long long declared_edges = 0;
  long long edge_lines = 0;
  std::vector<std::pair<int, int>> edges;
  int r = 1, k = 1, d = 2;
  std::vector<std::pair<int, Rational>> weight_lines;          // 0-based vertex
  std::vector<std::pair<int, std::vector<int>>> list_lines;    // 0-based vertex

  const auto vertex = [&](const std::string& token, int ln) {
    const int v = parse_int(token, ln, "a vertex id");
    if (v < 1 || v > n) {
      throw parse_error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n), ln);
    }
    return v - 1;
  };

  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    const std::string& kind = tokens[0];

    if (kind == "p") {
      if (have_header) throw parse_error("duplicate header", line_no);
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw parse_error("expected 'p edge <n> <m>'", line_no);
      }
      n = parse_int(tokens[2], line_no, "a vertex count");
      declared_edges = parse_int(tokens[3], line_no, "an edge count");
      if (n < 0 || declared_edges < 0) throw parse_error("negative header counts", line_no);
      have_header = true;
      continue;
    }
    if (kind == "param") {
      if (tokens.size() != 3) throw parse_error("expected 'param r|k|d <value>'", line_no);
      const int value = parse_int(tokens[2], line_no, "a parameter value");
      if (tokens[1] == "r") {
        r = value;
      } else if (tokens[1] == "k") {
        k = value;
      } else if (tokens[1] == "d") {
        d = value;
      } else {
        throw parse_error("unknown parameter '" + tokens[1] + "'", line_no);
      }
      continue;
    }
    if (!have_header) throw parse_error("'" + kind + "' line before the header", line_no);

    if (kind == "e") {
      if (tokens.size() != 3) throw parse_error("expected 'e <u> <v>'", line_no);
      const int u = vertex(tokens[1], line_no);
      const int v = vertex(tokens[2], line_no);
      if (u == v) throw parse_error("self-loop on vertex " + tokens[1], line_no);
      edges.emplace_back(u, v);
      ++edge_lines;
      continue;
    }
    if (kind == "w") {
      if (tokens.size() != 3) throw parse_error("expected 'w <v> <weight>'", line_no);
      const int v = vertex(tokens[1], line_no);
      Rational w;
      try {
        w = parse_rational(tokens[2]);
      } catch (const std::exception& e) {
        throw parse_error(e.what(), line_no);
      }
      if (w < 0) throw parse_error("negative weight", line_no);
      weight_lines.emplace_back(v, std::move(w));
      continue;
    }
    if (kind == "l") {
      if (tokens.size() < 2) throw parse_error("expected 'l <v> [colors...]'", line_no);
      const int v = vertex(tokens[1], line_no);
      std::vector<int> colors;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        colors.push_back(parse_int(tokens[i], line_no, "a color"));
      }
      std::sort(colors.begin(), colors.end());
      colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
      list_lines.emplace_back(v, std::move(colors));
      continue;
    }
    throw parse_error("unknown line type '" + kind + "'", line_no);
  }

  if (!have_header) throw parse_error("missing 'p edge' header", 0);
  if (edge_lines != declared_edges) {
    throw parse_error("header declares " + std::to_string(declared_edges) + " edges, found " +
                          std::to_string(edge_lines),
                      0);
  }

  Instance inst;
  inst.graph = Graph(n, edges);
  inst.r = r;
  inst.k = k;
  inst.d = d;
  inst.weights.assign(n, Rational(1));
  for (auto& [v, w] : weight_lines) inst.weights[v] = std::move(w);
  std::vector<int> full(std::max(r, 0));
  for (int c = 0; c < r; ++c) full[c] = c + 1;
  inst.lists.assign(n, full);
  for (auto& [v, colors] : list_lines) inst.lists[v] = std::move(colors);
  try {
    validate_instance(inst);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), 0);
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const int n = inst.graph.vertex_count();
  const auto edges = inst.graph.edges();
  std::ostringstream out;
  out << "p edge " << n << " " << edges.size() << "\n";
  out << "param r " << inst.r << "\n";
  out << "param k " << inst.k << "\n";
  out << "param d " << inst.d << "\n";
  for (const auto& [u, v] : edges) {
    out << "e " << u + 1 << " " << v + 1 << "\n";
  }
  for (int v = 0; v < n; ++v) {
    if (inst.weights[v] != 1) {
      out << "w " << v + 1 << " " << rational_to_string(inst.weights[v]) << "\n";
    }
  }
  std::vector<int> full(inst.r);
  for (int c = 0; c < inst.r; ++c) full[c] = c + 1;
  for (int v = 0; v < n; ++v) {
    if (inst.lists[v] != full) {
      out << "l " << v + 1;
      for (int c : inst.lists[v]) out << " " << c;
      out << "\n";
    }
  }
  return out.str();
}

Graph generate_kp3_free(const GeneratorSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("generate_kp3_free: negative n");
  if (spec.k < 1) throw std::invalid_argument("generate_kp3_free: k must be >= 1");
  if (spec.density_permille < 0 || spec.density_permille > 1000) {
    throw std::invalid_argument("generate_kp3_free: density_permille outside 0..1000");
  }
  SplitMix64 rng(spec.seed);

  if (spec.mode == GeneratorMode::Structured) {
    // Block sizes first, then block-1 edges in pair order, then the cluster
    // assignment; the draw order is part of the reproducibility contract.
    const int cap = std::min(spec.n, 3 * spec.k - 1);
    const int block = spec.k == 1 ? 0 : static_cast<int>(rng.below(cap + 1));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < block; ++u) {
      for (int v = u + 1; v < block; ++v) {
        if (rng.chance(spec.density_permille)) edges.emplace_back(u, v);
      }
    }
    std::vector<int> clique_of(spec.n, -1);
    int cliques = 0;
    for (int v = block; v < spec.n; ++v) {
      const int pick = static_cast<int>(rng.below(cliques + 1));
      if (pick == cliques) ++cliques;
      clique_of[v] = pick;
      for (int u = block; u < v; ++u) {
        if (clique_of[u] == pick) edges.emplace_back(u, v);
      }
    }
    return Graph(spec.n, edges);
  }

  const OracleBudget budget;
  if (spec.n > budget.max_vertices) {
    throw std::invalid_argument("generate_kp3_free: rejection mode needs n within the oracle budget");
  }
  for (int attempt = 0; attempt < spec.retry_cap; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < spec.n; ++u) {
      for (int v = u + 1; v < spec.n; ++v) {
        if (rng.chance(spec.density_permille)) edges.emplace_back(u, v);
      }
    }
    Graph g(spec.n, edges);
    if (!contains_k_disjoint_p3(g, spec.k, budget)) return g;
  }
  throw generation_error("generate_kp3_free: no " + std::to_string(spec.k) +
                         "P3-free sample within " + std::to_string(spec.retry_cap) +
                         " attempts (n=" + std::to_string(spec.n) +
                         ", density=" + std::to_string(spec.density_permille) + "/1000)");
}

}  // namespace kp3
