#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphspec/family.hpp"
#include "graphspec/isoperimetry.hpp"

namespace graphspec {

/// How a reported number relates to the quantity it estimates.
enum class Sidedness { CertifiedLower, CertifiedUpper, Extrapolated, Exact };

std::string to_string(Sidedness s);

struct Estimate {
  double value = 0.0;
  Sidedness side = Sidedness::Extrapolated;
  std::string source;
  bool converged = false;
};

struct ExhaustionRow {
  int n = 0;
  int omega_size = 0;
  double lambda1 = 0.0;
  double lambda_max = 0.0;
  std::optional<double> h;     // absent above the enumeration cap
  std::optional<double> hbar;
  std::optional<double> overlay_lambda1;
  std::optional<double> overlay_lambda_max;
};

/// Eigenvalue and isoperimetric sequences along the canonical exhaustion,
/// monotonicity verdicts, and limit estimates. Families with a known
/// closed-form spectrum carry exact overlay values and exact limits;
/// otherwise the limits come from a geometric-tail extrapolation when the
/// last deltas contract at a stable ratio below 0.9, and are reported
/// unconverged at the last value otherwise. Capped h/hbar columns are
/// truncated, never substituted.
struct ExhaustionReport {
  std::string family;
  std::string params;
  std::vector<ExhaustionRow> rows;
  bool lambda1_nonincreasing = false;
  bool lambda_max_nondecreasing = false;
  bool h_nonincreasing = false;
  bool hbar_nondecreasing = false;
  Estimate lambda_bottom;  // limit of lambda_1
  Estimate lambda_top;     // limit of lambda_max
  int h_rows = 0;
  int hbar_rows = 0;
};

ExhaustionReport exhaustion_limits(const GraphFamily& family, int n_max,
                                   const EnumerationCaps& caps = {});

struct SidedBound {
  std::string name;
  std::string quantity;  // "lambda_top" or "lambda_bottom"
  double value = 0.0;
  Sidedness side = Sidedness::CertifiedLower;
  std::string source;
};

/// Bounds on the limiting spectrum edges assembled from the exhaustion
/// sequences with strict sidedness bookkeeping: finite-stage hbar values
/// certify lower bounds on the limiting top, finite-stage h values certify
/// upper bounds on the limiting bottom, and combinations without the right
/// sidedness are suppressed with an explanation rather than emitted.
struct SpectrumBounds {
  std::vector<SidedBound> bounds;
  std::vector<std::string> suppressed;
};

SpectrumBounds spectrum_bounds_from_isoperimetry(const ExhaustionReport& report,
                                                 const GraphFamily& family);

}  // namespace graphspec
