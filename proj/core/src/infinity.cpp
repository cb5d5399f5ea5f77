#include "graphspec/infinity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "graphspec/dirichlet.hpp"
#include "graphspec/metric.hpp"
#include "graphspec/spectral.hpp"

namespace graphspec {

namespace {

// Closed star of the smallest-id vertex at distance k+1, clipped to the
// complement of B(x0,k) and truncated to the cap in BFS order.
VertexSet star_probe(const GraphFamily& family, int k, int cap) {
  const WeightedGraph& g = family.graph();
  auto dist = g.distances_from(family.base_vertex());
  int p = -1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[static_cast<size_t>(v)] == k + 1) {
      p = v;
      break;
    }
  if (p < 0) throw std::invalid_argument("no vertex at the requested depth");
  std::vector<int> members{p};
  for (const auto& nb : g.neighbors(p)) {
    if (static_cast<int>(members.size()) >= cap) break;
    if (nb.vertex == p) continue;
    if (dist[static_cast<size_t>(nb.vertex)] <= k) continue;
    members.push_back(nb.vertex);
  }
  return VertexSet(std::move(members));
}

}  // namespace

InfinityConstants infinity_constants(const GraphFamily& family, int k_max,
                                     const EnumerationCaps& caps) {
  InfinityConstants out;
  out.family = family.name();
  if (k_max + 2 > family.safe_radius())
    throw std::invalid_argument("k_max needs probes beyond the family horizon");

  std::vector<double> h_seq, hbar_seq;
  for (int k = 0; k <= k_max; ++k) {
    InfinityProbe probe;
    probe.k = k;
    probe.probe = star_probe(family, k, caps.dual_cheeger);
    family.require_safe(probe.probe);
    IsoperimetricResult h = cheeger_exact(family.graph(), probe.probe, caps);
    probe.h_upper = h.value;
    probe.h_witness = h.witness;
    if (probe.probe.size() >= 2) {
      IsoperimetricResult hb = dual_cheeger_exact(family.graph(), probe.probe, caps);
      probe.hbar_lower = hb.value;
      probe.hbar_witness = hb.pair_witness;
    }
    if (family.metadata().concentration_threshold)
      probe.threshold = family.metadata().concentration_threshold(k);
    h_seq.push_back(probe.h_upper);
    hbar_seq.push_back(probe.hbar_lower);
    out.probes.push_back(std::move(probe));
  }

  out.h_inf.value = h_seq.empty() ? 0.0 : h_seq.back();
  out.h_inf.side = Sidedness::Extrapolated;
  out.h_inf.source = "last stage probe; finite probes certify per-stage bounds only";
  out.hbar_inf.value = hbar_seq.empty() ? 0.0 : hbar_seq.back();
  out.hbar_inf.side = Sidedness::Extrapolated;
  out.hbar_inf.source = out.h_inf.source;

  if (family.metadata().declared_tail) {
    EssentialBounds eb = essential_bounds_from_inf(family.metadata().declared_tail->m_minus_inf,
                                                   family.metadata().declared_tail->kappa_inf);
    out.declared_band = EssentialBand{eb.lower, eb.upper, "declared tail constants"};
  }

  if (!family.metadata().concentration_threshold) {
    out.concentration_verdict = "not_evaluated";
  } else {
    bool ok = true;
    for (const auto& p : out.probes)
      if (p.threshold && p.hbar_lower >= *p.threshold) ok = false;
    out.concentration_verdict = ok ? "consistent" : "inconsistent";
  }
  return out;
}

EssentialBand essential_band_from_model(double l_sup, double kappa_inf) {
  if (l_sup < 2.0 || !std::isfinite(l_sup))
    throw std::invalid_argument("model band needs 2 <= l < infinity");
  if (kappa_inf < 0.0) throw std::invalid_argument("negative kappa");
  EssentialBand band;
  band.lower = 1.0 + 2.0 * std::sqrt(l_sup - 1.0) / l_sup - 2.0 * kappa_inf;
  band.upper = 2.0;
  band.source = "sup-ratio half-line model";
  return band;
}

EssentialBounds essential_bounds_from_inf(double m_minus_inf, double kappa_inf) {
  if (m_minus_inf < 0.0 || m_minus_inf > 0.5)
    throw std::invalid_argument("m_minus_inf must lie in [0, 1/2]");
  if (kappa_inf < 0.0) throw std::invalid_argument("negative kappa");
  EssentialBounds out;
  if (m_minus_inf == 0.0) {
    if (kappa_inf == 0.0) {
      out.lower = 1.0;
      out.upper = 1.0;
      out.concentrated = true;
      return out;
    }
    out.lower = 1.0 - kappa_inf;
    out.upper = 1.0 + kappa_inf;
    return out;
  }
  const double l = 1.0 / m_minus_inf;
  const double amp = 2.0 * std::sqrt(l - 1.0) / l;
  out.lower = 1.0 - amp - kappa_inf;
  out.upper = 1.0 + amp + kappa_inf;
  return out;
}

TraceBoundReport trace_bound_check(const GraphFamily& chain, int deleted_radius,
                                   const VertexSet& omega) {
  if (chain.name() != "selfloop_chain")
    throw std::invalid_argument("trace bound applies to the self-loop chain family");
  if (deleted_radius < 0) throw std::invalid_argument("negative deleted radius");
  chain.require_safe(omega);
  const WeightedGraph& g = chain.graph();
  auto dist = g.distances_from(chain.base_vertex());
  for (int v : omega)
    if (dist[static_cast<size_t>(v)] <= deleted_radius)
      throw std::invalid_argument("omega must avoid the deleted ball");

  TraceBoundReport rep;
  rep.deleted_radius = deleted_radius;
  rep.omega_size = omega.size();
  DirichletOperator op(g, omega);
  rep.lambda_max = spectrum(op).lambda_max();
  for (int v : omega) rep.trace += 1.0 - g.loop_weight(v) / g.measure(v);
  for (int k = deleted_radius + 1; k <= deleted_radius + omega.size(); ++k)
    rep.tail_sum += 2.0 / (std::pow(2.0, k) + 2.0);
  rep.tail_bound = std::pow(2.0, 1 - deleted_radius);
  const double tol = 1e-9;
  rep.holds = rep.lambda_max <= rep.trace + tol && rep.trace <= rep.tail_sum + tol &&
              rep.tail_sum <= rep.tail_bound + tol;
  return rep;
}

VolumeGrowthReport volume_growth_check(const GraphFamily& family, int r_max,
                                       std::optional<double> eps0) {
  if (r_max > family.safe_radius())
    throw std::invalid_argument("profile radius beyond the family horizon");
  VolumeGrowthReport rep;
  rep.r_max = r_max;
  SphereProfile prof = sphere_profile(family.graph(), family.base_vertex(), r_max);
  double series = 0.0;
  for (int r = 0; r <= r_max; ++r) {
    double vol = prof.ball_volume[static_cast<size_t>(r)];
    rep.lateral_ratio.push_back(prof.cumulative_q[static_cast<size_t>(r)] / vol);
    series += prof.q[static_cast<size_t>(r)] / vol;
    rep.lateral_series.push_back(series);
    double p = prof.p[static_cast<size_t>(r)];
    rep.lateral_to_outward.push_back(p > 0.0 ? prof.q[static_cast<size_t>(r)] / p : 0.0);
  }

  // least-squares fit of log vol(B_r) on the tail half of the range, where
  // the asymptotic rate dominates the small-radius transient
  const int fit_lo = std::max(0, r_max / 2);
  const int n = r_max - fit_lo + 1;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int r = fit_lo; r <= r_max; ++r) {
    double y = std::log(prof.ball_volume[static_cast<size_t>(r)]);
    sx += r;
    sy += y;
    sxx += static_cast<double>(r) * r;
    sxy += r * y;
  }
  double denom = n * sxx - sx * sx;
  rep.fitted_rate = (denom != 0.0) ? (n * sxy - sx * sy) / denom : 0.0;
  // scale chosen so the envelope sits below every probed volume
  double c1 = std::numeric_limits<double>::infinity();
  for (int r = 0; r <= r_max; ++r)
    c1 = std::min(c1, prof.ball_volume[static_cast<size_t>(r)] *
                          std::exp(-rep.fitted_rate * r));
  rep.fitted_scale = c1;

  if (!eps0) {
    rep.notes.push_back("no dual-Cheeger certificate supplied; hypothesis section only");
    return rep;
  }
  rep.hypothesis_checked = true;
  if (family.metadata().hbar_upper && *family.metadata().hbar_upper > 1.0 - *eps0)
    rep.notes.push_back("declared hbar bound does not reach 1 - eps0; certificate weak");
  rep.hypothesis_holds = true;
  for (double ratio : rep.lateral_ratio)
    if (ratio >= *eps0) rep.hypothesis_holds = false;
  if (rep.hypothesis_holds && rep.fitted_rate > 0.0 && rep.fitted_scale > 0.0) {
    rep.growth_asserted = true;
  } else if (!rep.hypothesis_holds) {
    rep.notes.push_back("lateral-to-volume ratio reaches eps0; no growth claim");
  } else {
    rep.notes.push_back("fitted envelope not positive; no growth claim");
  }
  return rep;
}

}  // namespace graphspec
