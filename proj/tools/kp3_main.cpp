// kp3: exact solvers for kP3-free graphs, batch front end.
//
// Exit codes: 0 success, 1 usage/parse error, 2 precondition violation
// (d out of range, budget exceeded, generator gave up, graph not kP3-free),
// 3 internal verification failure, 4 oracle mismatch.
//
// Reports are JSON on stdout with 1-based vertex ids and exact rational
// weights; timing goes to stderr so repeated runs diff cleanly.

#include <CLI11.hpp>

#include "kp3/distance_family.hpp"
#include "kp3/errors.hpp"
#include "kp3/family.hpp"
#include "kp3/instance_io.hpp"
#include "kp3/oracles.hpp"
#include "kp3/report.hpp"
#include "kp3/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;
constexpr int kExitOracleMismatch = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw kp3::parse_error("cannot open '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Sidecar vertex-set file: whitespace-separated 1-based ids, 'c' comments.
kp3::VertexSet read_vertex_set(const std::string& path, const kp3::Graph& g) {
  std::istringstream stream(read_file(path));
  std::string line;
  kp3::VertexSet out;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      if (token == "c") break;
      int v = 0;
      try {
        v = std::stoi(token);
      } catch (const std::exception&) {
        throw kp3::parse_error("expected a vertex id, got '" + token + "'", line_no);
      }
      if (v < 1 || v > g.vertex_count()) {
        throw kp3::parse_error("vertex " + std::to_string(v) + " outside the graph", line_no);
      }
      out.push_back(v - 1);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Family file: one member per 's' line, 1-based ids; 's' alone is the empty set.
std::vector<kp3::VertexSet> read_family_members(const std::string& path, const kp3::Graph& g) {
  std::istringstream stream(read_file(path));
  std::string line;
  std::vector<kp3::VertexSet> members;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind) || kind == "c") continue;
    if (kind != "s") throw kp3::parse_error("expected an 's' line, got '" + kind + "'", line_no);
    kp3::VertexSet member;
    int v = 0;
    while (tokens >> v) {
      if (v < 1 || v > g.vertex_count()) {
        throw kp3::parse_error("vertex " + std::to_string(v) + " outside the graph", line_no);
      }
      member.push_back(v - 1);
    }
    std::sort(member.begin(), member.end());
    member.erase(std::unique(member.begin(), member.end()), member.end());
    members.push_back(std::move(member));
  }
  return members;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct SolveArgs {
  std::string instance_path;
  bool verify_k = false;
  bool oracle = false;
  int jobs = 1;
  int budget = 16;
};

int run_solve(const std::string& problem, const SolveArgs& args) {
  const kp3::Instance inst = kp3::parse_instance(read_file(args.instance_path));
  kp3::OracleBudget budget;
  budget.max_vertices = args.budget;

  std::string kp3_check = "skipped";
  if (args.verify_k) {
    if (kp3::contains_k_disjoint_p3(inst.graph, inst.k, budget)) {
      std::cerr << "error: the graph contains " << inst.k << " disjoint induced P3s\n";
      return kExitPrecondition;
    }
    kp3_check = "ok";
  }

  const kp3::SolveOptions opts{args.jobs};
  Timer timer;
  kp3::Solution sol;
  if (problem == "mwlcis") {
    sol = kp3::solve_mwlcis(inst, opts);
  } else if (problem == "oct") {
    sol = kp3::solve_oct(inst.graph, inst.weights, inst.k, opts);
  } else if (problem == "mwis") {
    sol = kp3::solve_mwis(inst.graph, inst.weights, inst.k, opts);
  } else if (problem == "dsis") {
    sol = kp3::solve_distance_d_mwis(inst.graph, inst.weights, inst.k, inst.d, opts);
  } else {
    sol = kp3::solve_list_dr_coloring(inst, opts);
  }
  const double solve_ms = timer.ms();

  std::string why;
  if (!kp3::check_solution(inst, sol, &why)) {
    std::cerr << "error: solution failed validation: " << why << "\n";
    return kExitVerification;
  }

  std::string oracle_check = "skipped";
  if (args.oracle) {
    bool match = true;
    if (problem == "mwlcis") {
      match = sol.weight == kp3::brute_mwlcis(inst, budget);
    } else if (problem == "oct") {
      match = sol.weight == kp3::brute_oct(inst.graph, inst.weights, budget);
    } else if (problem == "mwis") {
      match = sol.weight == kp3::brute_distance_mwis(inst.graph, inst.weights, 2, budget);
    } else if (problem == "dsis") {
      match = sol.weight == kp3::brute_distance_mwis(inst.graph, inst.weights, inst.d, budget);
    } else {
      match = sol.decision_yes == kp3::brute_list_dr_coloring(inst, budget);
    }
    if (!match) {
      std::cerr << "error: oracle mismatch on " << problem << "\n";
      return kExitOracleMismatch;
    }
    oracle_check = "match";
  }

  std::cout << kp3::solve_report("solve " + problem + " " + args.instance_path, inst, sol,
                                 kp3_check, oracle_check, "ok");
  std::cerr << "elapsed_ms=" << solve_ms << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers for kP3-free graphs"};
  app.require_subcommand(1);

  // ---- solve -----------------------------------------------------------
  CLI::App* solve = app.add_subcommand("solve", "run a solver on an instance file");
  solve->require_subcommand(1);
  static const std::vector<std::string> problems{"mwlcis", "oct", "mwis", "dsis", "ldrcol"};
  SolveArgs solve_args;
  std::string chosen_problem;
  for (const std::string& problem : problems) {
    CLI::App* sub = solve->add_subcommand(problem);
    sub->add_option("instance", solve_args.instance_path, "instance file")->required();
    sub->add_flag("--verify-k", solve_args.verify_k, "check kP3-freeness first (desk scale)");
    sub->add_flag("--oracle", solve_args.oracle, "cross-run the brute-force oracle");
    sub->add_option("--jobs", solve_args.jobs, "tuple-scan worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", solve_args.budget, "oracle vertex budget")
        ->check(CLI::PositiveNumber);
    sub->callback([&chosen_problem, problem] { chosen_problem = problem; });
  }

  // ---- family ----------------------------------------------------------
  CLI::App* family = app.add_subcommand("family", "generate or verify vertex families");
  family->require_subcommand(1);
  std::string family_instance, family_file, forbidden_file;
  bool dump_members = false;
  int family_budget = 16;

  CLI::App* fam_gen = family->add_subcommand("gen", "amiable family of the instance graph");
  fam_gen->add_option("instance", family_instance)->required();
  fam_gen->add_flag("--dump", dump_members, "include the members in the report");

  CLI::App* fam_dist = family->add_subcommand("gen-dist", "distance-d family (d >= 6)");
  fam_dist->add_option("instance", family_instance)->required();
  fam_dist->add_option("--forbidden", forbidden_file, "sidecar file with forbidden vertices");
  fam_dist->add_flag("--dump", dump_members, "include the members in the report");

  CLI::App* fam_verify = family->add_subcommand("verify", "verify a family file");
  fam_verify->add_option("instance", family_instance)->required();
  fam_verify->add_option("--family", family_file, "family file ('s' lines)")->required();
  fam_verify->add_option("--forbidden", forbidden_file, "sidecar file with forbidden vertices");
  fam_verify->add_option("--budget", family_budget)->check(CLI::PositiveNumber);

  // ---- gen -------------------------------------------------------------
  CLI::App* gen = app.add_subcommand("gen", "emit a seeded kP3-free instance on stdout");
  bool structured = false, rejection = false;
  kp3::GeneratorSpec spec;
  double density = 0.5;
  int gen_r = 1, gen_d = 2;
  gen->add_flag("--structured", structured, "block + cluster construction (any n)");
  gen->add_flag("--rejection", rejection, "filtered Erdos-Renyi (desk scale)");
  gen->add_option("--n", spec.n, "vertex count")->required();
  gen->add_option("--k", spec.k, "forbidden-P3 packing parameter")->required();
  gen->add_option("--seed", spec.seed, "generator seed")->required();
  gen->add_option("--density", density, "edge probability (0..1)");
  gen->add_option("--retry-cap", spec.retry_cap, "rejection attempts before giving up");
  gen->add_option("--r", gen_r, "stamp 'param r'");
  gen->add_option("--d", gen_d, "stamp 'param d'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (solve->parsed()) return run_solve(chosen_problem, solve_args);

    if (family->parsed()) {
      const kp3::Instance inst = kp3::parse_instance(read_file(family_instance));
      kp3::OracleBudget budget;
      budget.max_vertices = family_budget;

      if (fam_gen->parsed()) {
        Timer timer;
        const kp3::VertexFamily fam = kp3::gamma_k(inst.graph, inst.k);
        std::cout << kp3::family_report("family gen " + family_instance, inst, fam, dump_members);
        std::cerr << "elapsed_ms=" << timer.ms() << "\n";
        return kExitOk;
      }

      const kp3::VertexSet forbidden =
          forbidden_file.empty() ? kp3::VertexSet{} : read_vertex_set(forbidden_file, inst.graph);

      if (fam_dist->parsed()) {
        Timer timer;
        const kp3::VertexFamily fam = kp3::lambda_k_d(inst.graph, forbidden, inst.k, inst.d);
        std::cout << kp3::family_report("family gen-dist " + family_instance, inst, fam,
                                        dump_members);
        std::cerr << "elapsed_ms=" << timer.ms() << "\n";
        return kExitOk;
      }

      // verify
      kp3::VertexFamily fam;
      fam.base = inst.graph;
      fam.members = read_family_members(family_file, inst.graph);
      fam.d = inst.d;
      fam.forbidden = forbidden;
      fam.kind = inst.d >= 6 ? kp3::FamilyKind::AvoidingDistanceAmiable : kp3::FamilyKind::Amiable;
      const kp3::Verdict verdict =
          inst.d >= 6 ? kp3::verify_distance_family(inst.graph, forbidden, inst.d, fam, budget)
                      : kp3::verify_amiable(inst.graph, fam, budget);
      std::cout << kp3::family_verify_report("family verify " + family_instance, inst, verdict);
      return verdict.ok ? kExitOk : kExitVerification;
    }

    // gen
    if (structured == rejection) {
      std::cerr << "error: pick exactly one of --structured / --rejection\n";
      return kExitParse;
    }
    spec.mode = structured ? kp3::GeneratorMode::Structured : kp3::GeneratorMode::Rejection;
    if (density < 0.0 || density > 1.0) {
      std::cerr << "error: density outside [0, 1]\n";
      return kExitParse;
    }
    spec.density_permille = static_cast<int>(density * 1000.0 + 0.5);
    const kp3::Graph g = kp3::generate_kp3_free(spec);
    std::cout << kp3::serialize_instance(kp3::make_instance(g, gen_r, spec.k, gen_d));
    return kExitOk;
  } catch (const kp3::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
