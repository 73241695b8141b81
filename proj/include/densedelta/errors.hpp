#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace densedelta {

// Malformed bytes in an input file. `line` is 1-based, 0 when unknown.
struct io_error : std::runtime_error {
  int line;
  io_error(const std::string& what, int line_ = 0)
      : std::runtime_error(line_ > 0 ? what + " (line " + std::to_string(line_) + ")" : what),
        line(line_) {}
};

// Structurally valid input that the algorithms do not accept
// (K_{delta+1} present, sparse vertices, infeasible generator parameters, ...).
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee failed mid-run. Carries a JSON witness naming the
// offending objects; callers surface it instead of emitting partial output.
struct check_failure : std::runtime_error {
  nlohmann::json witness;
  check_failure(const std::string& what, nlohmann::json w = {})
      : std::runtime_error(what), witness(std::move(w)) {}
};

}  // namespace densedelta
