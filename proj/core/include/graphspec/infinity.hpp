#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphspec/exhaustion.hpp"
#include "graphspec/family.hpp"
#include "graphspec/isoperimetry.hpp"

namespace graphspec {

/// One deleted-ball stage: finite witnesses inside the complement of B(x0, k)
/// certify an upper bound on the stage Cheeger constant and a lower bound on
/// the stage dual Cheeger constant. Probes are the closed star of the
/// smallest-id vertex at distance k+1, truncated to the enumeration cap.
struct InfinityProbe {
  int k = 0;
  VertexSet probe;
  double h_upper = 0.0;
  VertexSet h_witness;
  double hbar_lower = 0.0;
  std::optional<PartitionPair> hbar_witness;
  std::optional<double> threshold;  // concentration schedule value at k
};

struct EssentialBand {
  double lower = 0.0;
  double upper = 2.0;
  std::string source;
};

struct InfinityConstants {
  std::string family;
  std::vector<InfinityProbe> probes;
  Estimate h_inf;     // extrapolated only; finite probes cannot certify the limit
  Estimate hbar_inf;
  std::optional<EssentialBand> declared_band;  // from declared tail constants
  std::string concentration_verdict;  // "", "consistent", or "not_evaluated"
};

InfinityConstants infinity_constants(const GraphFamily& family, int k_max,
                                     const EnumerationCaps& caps = {});

/// Band [1 + 2 sqrt(l-1)/l - 2 kappa_inf, 2] that must meet the essential
/// spectrum when l = sup mu/mu_- is finite and at least 2.
EssentialBand essential_band_from_model(double l_sup, double kappa_inf);

/// Two-sided essential-spectrum bounds from tail constants: with
/// l = 1/m_minus_inf in [2, inf), the band is 1 -+ 2 sqrt(l-1)/l -+ kappa_inf.
/// m_minus_inf = 0 with kappa_inf = 0 collapses the band to {1}.
struct EssentialBounds {
  double lower = 0.0;
  double upper = 2.0;
  bool concentrated = false;  // band collapsed to the single point 1
};

EssentialBounds essential_bounds_from_inf(double m_minus_inf, double kappa_inf);

/// Trace inequality on the geometric self-loop chain: for omega inside the
/// complement of B(0, K), the top Dirichlet eigenvalue is at most the trace,
/// which is at most the closed tail sum and at most 2^{1-K}.
struct TraceBoundReport {
  int deleted_radius = 0;
  int omega_size = 0;
  double lambda_max = 0.0;
  double trace = 0.0;
  double tail_sum = 0.0;   // sum_{k=K+1}^{K+#omega} 2/(2^k+2)
  double tail_bound = 0.0; // 2^{1-K}
  bool holds = false;
};

TraceBoundReport trace_bound_check(const GraphFamily& chain, int deleted_radius,
                                   const VertexSet& omega);

/// Sphere-profile growth diagnostics: lateral-to-volume ratios, the summable
/// lateral series, the lateral-to-outward ratio, and a least-squares fit of
/// log vol(B_r). With a dual-Cheeger certificate hbar <= 1 - eps0 and the
/// lateral ratio staying below eps0 over the probed range, asserts the fitted
/// exponential lower envelope.
struct VolumeGrowthReport {
  int r_max = 0;
  std::vector<double> lateral_ratio;        // Q_r / vol(B_r)
  std::vector<double> lateral_series;       // partial sums of q_r / vol(B_r)
  std::vector<double> lateral_to_outward;   // q_r / p_r
  double fitted_rate = 0.0;                 // C2 in vol >= C1 exp(C2 r)
  double fitted_scale = 0.0;                // C1
  bool hypothesis_checked = false;          // certificate supplied
  bool hypothesis_holds = false;            // ratios stay below eps0
  bool growth_asserted = false;
  std::vector<std::string> notes;
};

VolumeGrowthReport volume_growth_check(const GraphFamily& family, int r_max,
                                       std::optional<double> eps0);

}  // namespace graphspec
