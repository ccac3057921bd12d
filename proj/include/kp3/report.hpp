#pragma once

#include "kp3/family.hpp"
#include "kp3/instance.hpp"
#include "kp3/solvers.hpp"

#include <string>

namespace kp3 {

/// FNV-1a (64-bit) over the canonical serialization, as 16 hex digits.
std::string instance_digest(const Instance& inst);

/// Machine-readable run reports, one JSON object per run, stable key order,
/// vertex ids 1-based to match the file format. Weights are exact rational
/// strings. Reports carry no timing so that repeated runs (and runs with
/// different --jobs settings) are byte-identical; timing goes to stderr.
std::string solve_report(const std::string& command, const Instance& inst, const Solution& sol,
                         const std::string& kp3_check, const std::string& oracle_check,
                         const std::string& solution_check);

std::string family_report(const std::string& command, const Instance& inst,
                          const VertexFamily& fam, bool dump_members);

std::string family_verify_report(const std::string& command, const Instance& inst,
                                 const Verdict& verdict);

}  // namespace kp3
