#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphspec/isoperimetry.hpp"
#include "graphspec/serialize.hpp"

namespace graphspec {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  EnumerationCaps caps;
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

/// Runs the full verification battery. With check_determinism the whole
/// battery is executed a second time and the serialized reports are compared
/// byte for byte.
SuiteReport run_verification_suite(std::uint64_t seed, const EnumerationCaps& caps = {},
                                   bool check_determinism = true);

Json to_json(const SuiteReport& report);

}  // namespace graphspec
