#pragma once

#include <stdexcept>
#include <string>

namespace kp3 {

/// Distance parameter outside the supported range (the distance-d machinery
/// requires d >= 6; the classical problems require d == 2).
class unsupported_distance_error : public std::invalid_argument {
 public:
  explicit unsupported_distance_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An exhaustive routine refused to run because the input exceeds its budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed instance or family text. `line` is 1-based, 0 when unknown.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line(line) {}
  int line = 0;
};

/// The rejection-sampling generator gave up after exhausting its retry cap.
class generation_error : public std::runtime_error {
 public:
  explicit generation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kp3
