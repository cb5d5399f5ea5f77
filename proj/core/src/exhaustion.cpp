#include "graphspec/exhaustion.hpp"

#include <cmath>
#include <numbers>

#include "graphspec/dirichlet.hpp"
#include "graphspec/halfline.hpp"
#include "graphspec/spectral.hpp"

namespace graphspec {

std::string to_string(Sidedness s) {
  switch (s) {
    case Sidedness::CertifiedLower: return "certified_lower";
    case Sidedness::CertifiedUpper: return "certified_upper";
    case Sidedness::Extrapolated: return "extrapolated";
    case Sidedness::Exact: return "exact";
  }
  return "unknown";
}

namespace {

struct Overlay {
  std::function<double(int)> lambda1;
  std::function<double(int)> lambda_max;
  double limit_bottom;
  double limit_top;
  int min_n = 1;  // smallest stage where the published formula applies
};

std::optional<Overlay> closed_form_overlay(const GraphFamily& family) {
  const double pi = std::numbers::pi;
  const std::string& name = family.name();
  if (name == "infinite_path")
    return Overlay{[pi](int n) { return 1.0 - std::cos(pi / (n + 1)); },
                   [pi](int n) { return 1.0 + std::cos(pi / (n + 1)); }, 0.0, 2.0, 1};
  if (name == "ladder")
    // at n = 1 the constant rail-antisymmetric eigenvalue 6/5 still dominates
    return Overlay{[pi](int n) { return 0.8 * (1.0 - std::cos(pi / (n + 1))); },
                   [pi](int n) { return 0.8 * (1.0 + std::cos(pi / (n + 1))); }, 0.0, 1.6, 2};
  if (name == "cayley_line_triangle")
    return Overlay{[pi](int n) { return 0.5 * (1.0 - std::cos(pi / (n + 1))); },
                   [pi](int n) { return 1.25 + 0.5 * std::cos(pi / (n + 1)); }, 0.0, 1.75, 1};
  if (name == "halfline") {
    // exhaustion index r is the ball radius
    double l = 2.0;
    const std::string& p = family.params();
    if (auto pos = p.find("l="); pos != std::string::npos)
      l = std::stod(p.substr(pos + 2));
    double amp = 2.0 * std::sqrt(l - 1.0) / l;
    return Overlay{[l](int r) { return HalfLineModel::solve(l, r).lambda1; },
                   [l](int r) { return HalfLineModel::solve(l, r).lambda_max; },
                   1.0 - amp, 1.0 + amp, 1};
  }
  return std::nullopt;
}

// Geometric-tail estimate from the last three deltas: requires a stable
// contraction ratio below 0.9, otherwise reports the last value unconverged.
Estimate extrapolate(const std::vector<double>& seq, const std::string& source) {
  Estimate e;
  e.source = source;
  if (seq.empty()) return e;
  e.value = seq.back();
  if (seq.size() < 4) {
    e.converged = false;
    e.side = Sidedness::Extrapolated;
    return e;
  }
  const size_t k = seq.size();
  double d1 = seq[k - 3] - seq[k - 4];
  double d2 = seq[k - 2] - seq[k - 3];
  double d3 = seq[k - 1] - seq[k - 2];
  const double noise = 1e-12 * std::max(1.0, std::abs(seq.back()));
  if (std::abs(d2) <= noise && std::abs(d3) <= noise) {
    e.converged = true;  // tail flat to machine precision
    e.side = Sidedness::Extrapolated;
    return e;
  }
  if (d1 == 0.0 || d2 == 0.0) {
    e.converged = true;
    e.side = Sidedness::Extrapolated;
    return e;
  }
  double r1 = d2 / d1;
  double r2 = d3 / d2;
  if (r1 > 0.0 && r2 > 0.0 && r1 < 0.9 && r2 < 0.9 && std::abs(r2 - r1) <= 0.1) {
    e.value = seq.back() + d3 * r2 / (1.0 - r2);
    e.converged = true;
  } else {
    e.converged = false;
  }
  e.side = Sidedness::Extrapolated;
  return e;
}

}  // namespace

ExhaustionReport exhaustion_limits(const GraphFamily& family, int n_max,
                                   const EnumerationCaps& caps) {
  ExhaustionReport rep;
  rep.family = family.name();
  rep.params = family.params();
  auto overlay = closed_form_overlay(family);

  n_max = std::min(n_max, family.max_exhaustion());
  std::vector<double> l1_seq, lmax_seq;
  for (int n = 1; n <= n_max; ++n) {
    VertexSet omega = family.exhaustion(n);
    if (omega.size() > caps.eigensolver) break;
    ExhaustionRow row;
    row.n = n;
    row.omega_size = omega.size();
    DirichletOperator op(family.graph(), omega);
    SpectralResult sp = spectrum(op);
    row.lambda1 = sp.lambda1();
    row.lambda_max = sp.lambda_max();
    l1_seq.push_back(row.lambda1);
    lmax_seq.push_back(row.lambda_max);
    if (omega.size() <= caps.cheeger) {
      row.h = cheeger_exact(family.graph(), omega, caps).value;
      ++rep.h_rows;
    }
    if (omega.size() >= 2 && omega.size() <= caps.dual_cheeger) {
      row.hbar = dual_cheeger_exact(family.graph(), omega, caps).value;
      ++rep.hbar_rows;
    }
    if (overlay && n >= overlay->min_n) {
      row.overlay_lambda1 = overlay->lambda1(n);
      row.overlay_lambda_max = overlay->lambda_max(n);
    }
    rep.rows.push_back(std::move(row));
  }

  const double slack = 1e-10;
  rep.lambda1_nonincreasing = true;
  rep.lambda_max_nondecreasing = true;
  rep.h_nonincreasing = true;
  rep.hbar_nondecreasing = true;
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    if (rep.rows[i].lambda1 > rep.rows[i - 1].lambda1 + slack)
      rep.lambda1_nonincreasing = false;
    if (rep.rows[i].lambda_max < rep.rows[i - 1].lambda_max - slack)
      rep.lambda_max_nondecreasing = false;
    if (rep.rows[i].h && rep.rows[i - 1].h && *rep.rows[i].h > *rep.rows[i - 1].h + slack)
      rep.h_nonincreasing = false;
    if (rep.rows[i].hbar && rep.rows[i - 1].hbar &&
        *rep.rows[i].hbar < *rep.rows[i - 1].hbar - slack)
      rep.hbar_nondecreasing = false;
  }

  if (overlay) {
    rep.lambda_bottom = {overlay->limit_bottom, Sidedness::Exact, "closed_form", true};
    rep.lambda_top = {overlay->limit_top, Sidedness::Exact, "closed_form", true};
  } else {
    rep.lambda_bottom = extrapolate(l1_seq, "geometric_tail(lambda1)");
    rep.lambda_top = extrapolate(lmax_seq, "geometric_tail(lambda_max)");
  }
  return rep;
}

SpectrumBounds spectrum_bounds_from_isoperimetry(const ExhaustionReport& report,
                                                 const GraphFamily& family) {
  SpectrumBounds out;
  // Finite-stage h decreases toward the limit constant: certified upper bound.
  std::optional<double> h_last;
  std::optional<double> hbar_last;
  int h_n = 0, hbar_n = 0;
  for (const auto& row : report.rows) {
    if (row.h) {
      h_last = row.h;
      h_n = row.n;
    }
    if (row.hbar) {
      hbar_last = row.hbar;
      hbar_n = row.n;
    }
  }

  if (hbar_last) {
    // lambda_top >= 2 hbar(Gamma) + h(Gamma) >= 2 hbar(Omega_n) + 0
    out.bounds.push_back({"dual_lower", "lambda_top", 2.0 * *hbar_last,
                          Sidedness::CertifiedLower,
                          "2*hbar(Omega_" + std::to_string(hbar_n) + ") + trivial h >= 0"});
  }
  out.suppressed.push_back(
      "finite-stage h is an upper bound on the limit constant, so 2*hbar + h with the "
      "finite h term has the wrong sidedness for a certified lower bound; h replaced by 0");
  if (h_last) {
    out.bounds.push_back({"cheeger_upper", "lambda_bottom", *h_last, Sidedness::CertifiedUpper,
                          "h(Omega_" + std::to_string(h_n) + ")"});
  }
  out.bounds.push_back({"trivial_lower", "lambda_bottom", 0.0, Sidedness::CertifiedLower,
                        "spectrum is nonnegative"});
  out.bounds.push_back({"trivial_upper", "lambda_top", 2.0, Sidedness::CertifiedUpper,
                        "spectrum is bounded by 2"});
  out.suppressed.push_back(
      "upper bound 1+sqrt(1-(1-hbar)^2) needs a certified upper bound on the limiting "
      "hbar; finite stages certify only lower bounds");

  if (family.metadata().hbar_upper) {
    double hu = std::min(1.0, *family.metadata().hbar_upper);
    out.bounds.push_back({"dual_upper_declared", "lambda_top",
                          1.0 + std::sqrt(std::max(0.0, 1.0 - (1.0 - hu) * (1.0 - hu))),
                          Sidedness::CertifiedUpper, "declared hbar upper bound"});
  }

  // Exact or extrapolated limit overlays, clearly labeled.
  if (report.lambda_top.converged)
    out.bounds.push_back({"limit_estimate", "lambda_top", report.lambda_top.value,
                          report.lambda_top.side, report.lambda_top.source});
  if (report.lambda_bottom.converged)
    out.bounds.push_back({"limit_estimate", "lambda_bottom", report.lambda_bottom.value,
                          report.lambda_bottom.side, report.lambda_bottom.source});
  return out;
}

}  // namespace graphspec
