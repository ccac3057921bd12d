#include "kp3/report.hpp"

#include "kp3/instance_io.hpp"

#include <json.hpp>

#include <cstdint>

namespace kp3 {

namespace {

using Json = nlohmann::ordered_json;

Json vertex_array(const VertexSet& set) {
  Json out = Json::array();
  for (int v : set) out.push_back(v + 1);
  return out;
}

Json coloring_object(const std::map<int, int>& coloring) {
  Json out = Json::object();
  for (const auto& [v, c] : coloring) out[std::to_string(v + 1)] = c;
  return out;
}

}  // namespace

std::string instance_digest(const Instance& inst) {
  const std::string bytes = serialize_instance(inst);
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001B3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

std::string solve_report(const std::string& command, const Instance& inst, const Solution& sol,
                         const std::string& kp3_check, const std::string& oracle_check,
                         const std::string& solution_check) {
  Json report;
  report["command"] = command;
  report["instance"] = instance_digest(inst);
  report["weight"] = rational_to_string(sol.weight);
  report["chosen"] = vertex_array(sol.chosen);
  if (sol.coloring) {
    report["coloring"] = coloring_object(*sol.coloring);
  } else {
    report["coloring"] = nullptr;
  }
  if (sol.kind == CertificateKind::LdrDecision) {
    report["decision"] = sol.decision_yes ? "yes" : "no";
  }
  Json verification;
  verification["kp3_free"] = kp3_check;
  verification["oracle"] = oracle_check;
  verification["solution"] = solution_check;
  report["verification"] = verification;
  return report.dump(2) + "\n";
}

std::string family_report(const std::string& command, const Instance& inst,
                          const VertexFamily& fam, bool dump_members) {
  Json report;
  report["command"] = command;
  report["instance"] = instance_digest(inst);
  report["family_size"] = fam.size();
  const int n = inst.graph.vertex_count();
  if (n >= 1) {
    const BigInt bound = family_size_bound(n, inst.k);
    report["size_bound"] = bound.str();
    report["size_bound_ok"] = BigInt(fam.size()) <= bound;
  } else {
    report["size_bound"] = nullptr;
    report["size_bound_ok"] = true;
  }
  if (dump_members) {
    Json members = Json::array();
    for (const VertexSet& member : fam.members) members.push_back(vertex_array(member));
    report["members"] = members;
  }
  return report.dump(2) + "\n";
}

std::string family_verify_report(const std::string& command, const Instance& inst,
                                 const Verdict& verdict) {
  Json report;
  report["command"] = command;
  report["instance"] = instance_digest(inst);
  report["verdict"] = verdict.ok ? "ok" : "counterexample";
  if (!verdict.ok) {
    report["reason"] = verdict.reason;
    report["counterexample"] =
        verdict.counterexample ? vertex_array(*verdict.counterexample) : Json();
  }
  return report.dump(2) + "\n";
}

}  // namespace kp3
