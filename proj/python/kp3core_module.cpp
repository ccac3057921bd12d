// Python bindings for the kp3 core: graphs, instances, family generators,
// solvers and the brute-force oracles. Weights cross the boundary as exact
// rational strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kp3/distance_family.hpp"
#include "kp3/errors.hpp"
#include "kp3/family.hpp"
#include "kp3/instance_io.hpp"
#include "kp3/oracles.hpp"
#include "kp3/report.hpp"
#include "kp3/solvers.hpp"

#include <optional>
#include <string>

namespace py = pybind11;
using namespace kp3;

namespace {

std::vector<std::string> weight_strings(const Instance& inst) {
  std::vector<std::string> out;
  out.reserve(inst.weights.size());
  for (const Rational& w : inst.weights) out.push_back(rational_to_string(w));
  return out;
}

std::string kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Mwlcis: return "mwlcis";
    case CertificateKind::Oct: return "oct";
    case CertificateKind::Mwis: return "mwis";
    case CertificateKind::Dsis: return "dsis";
    case CertificateKind::LdrDecision: return "ldr_decision";
  }
  return "?";
}

GeneratorMode mode_from(const std::string& name) {
  if (name == "structured") return GeneratorMode::Structured;
  if (name == "rejection") return GeneratorMode::Rejection;
  throw std::invalid_argument("mode must be 'structured' or 'rejection'");
}

}  // namespace

PYBIND11_MODULE(kp3core, m) {
  m.doc() = "exact solvers for kP3-free graphs";

  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<generation_error>(m, "GenerationError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("labels", &Graph::labels)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", &Graph::neighbors)
      .def("distance", [](const Graph& g, int u, int v) { return g.distance(u, v); })
      .def("__repr__", [](const Graph& g) {
        return "<kp3 Graph with " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  py::class_<Instance>(m, "Instance")
      .def_readonly("graph", &Instance::graph)
      .def_readonly("r", &Instance::r)
      .def_readonly("k", &Instance::k)
      .def_readonly("d", &Instance::d)
      .def_readonly("lists", &Instance::lists)
      .def_property_readonly("weights", &weight_strings)
      .def("set_weight",
           [](Instance& inst, int v, const std::string& w) {
             inst.weights.at(v) = parse_rational(w);
             validate_instance(inst);
           })
      .def("set_list", [](Instance& inst, int v, std::vector<int> colors) {
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        inst.lists.at(v) = std::move(colors);
        validate_instance(inst);
      });

  py::class_<Solution>(m, "Solution")
      .def_property_readonly("kind", [](const Solution& s) { return kind_name(s.kind); })
      .def_readonly("chosen", &Solution::chosen)
      .def_readonly("coloring", &Solution::coloring)
      .def_readonly("decision_yes", &Solution::decision_yes)
      .def_property_readonly("weight",
                             [](const Solution& s) { return rational_to_string(s.weight); });

  py::class_<VertexFamily>(m, "VertexFamily")
      .def_readonly("members", &VertexFamily::members)
      .def_readonly("d", &VertexFamily::d)
      .def_readonly("forbidden", &VertexFamily::forbidden)
      .def_property_readonly("size", &VertexFamily::size);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("ok", &Verdict::ok)
      .def_readonly("reason", &Verdict::reason)
      .def_readonly("counterexample", &Verdict::counterexample)
      .def("__bool__", [](const Verdict& v) { return v.ok; });

  // graph primitives
  m.def("induced_subgraph", &induced_subgraph);
  m.def("connected_components", &connected_components);
  m.def("is_p3_free", &is_p3_free);
  m.def("power_graph", &power_graph);
  m.def("is_distance_d_independent", &is_distance_d_independent);

  // instances and the generator
  m.def("parse_instance", &parse_instance);
  m.def("serialize_instance", &serialize_instance);
  m.def("instance_digest", &instance_digest);
  m.def(
      "make_instance",
      [](const Graph& g, int r, int k, int d) { return make_instance(g, r, k, d); },
      py::arg("graph"), py::arg("r") = 1, py::arg("k") = 1, py::arg("d") = 2);
  m.def(
      "generate_kp3_free",
      [](const std::string& mode, int n, int k, int density_permille, std::uint64_t seed,
         int retry_cap) {
        GeneratorSpec spec;
        spec.mode = mode_from(mode);
        spec.n = n;
        spec.k = k;
        spec.density_permille = density_permille;
        spec.seed = seed;
        spec.retry_cap = retry_cap;
        return generate_kp3_free(spec);
      },
      py::arg("mode"), py::arg("n"), py::arg("k"), py::arg("density_permille"), py::arg("seed"),
      py::arg("retry_cap") = 1000);

  // family generators and verifiers
  m.def("gamma_k", [](const Graph& g, int k) { return gamma_k(g, k); }, py::arg("graph"),
        py::arg("k"));
  m.def("lambda_k_d", &lambda_k_d, py::arg("graph"), py::arg("forbidden"), py::arg("k"),
        py::arg("d"));
  m.def(
      "verify_amiable",
      [](const Graph& g, const VertexFamily& fam) { return verify_amiable(g, fam); },
      py::arg("graph"), py::arg("family"));
  m.def(
      "verify_distance_family",
      [](const Graph& g, const VertexSet& forbidden, int d, const VertexFamily& fam) {
        return verify_distance_family(g, forbidden, d, fam);
      },
      py::arg("graph"), py::arg("forbidden"), py::arg("d"), py::arg("family"));

  // solvers (instance-based; jobs controls tuple-level parallelism)
  m.def(
      "solve_mwlcis",
      [](const Instance& inst, int jobs) { return solve_mwlcis(inst, {jobs}); },
      py::arg("instance"), py::arg("jobs") = 1);
  m.def(
      "solve_oct",
      [](const Instance& inst, int jobs) {
        return solve_oct(inst.graph, inst.weights, inst.k, {jobs});
      },
      py::arg("instance"), py::arg("jobs") = 1);
  m.def(
      "solve_mwis",
      [](const Instance& inst, int jobs) {
        return solve_mwis(inst.graph, inst.weights, inst.k, {jobs});
      },
      py::arg("instance"), py::arg("jobs") = 1);
  m.def(
      "solve_distance_d_mwis",
      [](const Instance& inst, int jobs) {
        return solve_distance_d_mwis(inst.graph, inst.weights, inst.k, inst.d, {jobs});
      },
      py::arg("instance"), py::arg("jobs") = 1);
  m.def(
      "solve_list_dr_coloring",
      [](const Instance& inst, int jobs) { return solve_list_dr_coloring(inst, {jobs}); },
      py::arg("instance"), py::arg("jobs") = 1);
  m.def(
      "check_solution",
      [](const Instance& inst, const Solution& sol) {
        std::string why;
        const bool ok = check_solution(inst, sol, &why);
        return py::make_tuple(ok, why);
      },
      py::arg("instance"), py::arg("solution"));

  // brute-force oracles
  m.def(
      "brute_mwlcis",
      [](const Instance& inst) { return rational_to_string(brute_mwlcis(inst)); },
      py::arg("instance"));
  m.def(
      "brute_oct",
      [](const Instance& inst) {
        return rational_to_string(brute_oct(inst.graph, inst.weights));
      },
      py::arg("instance"));
  m.def(
      "brute_distance_mwis",
      [](const Instance& inst) {
        return rational_to_string(brute_distance_mwis(inst.graph, inst.weights, inst.d));
      },
      py::arg("instance"));
  m.def(
      "brute_list_dr_coloring", [](const Instance& inst) { return brute_list_dr_coloring(inst); },
      py::arg("instance"));
  m.def(
      "enumerate_maximal_independent_sets",
      [](const Graph& g) { return enumerate_maximal_independent_sets(g); }, py::arg("graph"));
  m.def(
      "contains_k_disjoint_p3",
      [](const Graph& g, int k) { return contains_k_disjoint_p3(g, k); }, py::arg("graph"),
      py::arg("k"));
}
