#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "graphspec/isoperimetry.hpp"

namespace graphspec::cli {

/// Exit codes: 0 success, 2 verification violation, 3 input error,
/// 4 cap exceeded without a heuristic fallback.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 2;
inline constexpr int kInputError = 3;
inline constexpr int kCapExceeded = 4;

struct RunConfig {
  std::string command;
  std::string graph_file;
  std::string family;
  std::map<std::string, double> params;
  std::string omega;  // "ids:0,1,2" | "ball:<x0|base>,<r>" | "canonical:<n>"
  EnumerationCaps caps;
  std::uint64_t seed = 1;
  std::string out_path;        // empty writes to stdout
  std::string format = "json";  // json | csv | table
  int n_max = 12;
  int k_max = 4;
  bool at_infinity = false;
  std::optional<double> eps0;
};

int run_command(const RunConfig& config);

}  // namespace graphspec::cli
