#include "graphspec/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graphspec {

WeightedGraph graph_from_json(const Json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph json needs 'vertices' and 'edges'");
  int n = j.at("vertices").get<int>();
  std::vector<WeightedEdge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3))
      throw std::invalid_argument("edge entries are [u, v] or [u, v, w]");
    WeightedEdge we{e.at(0).get<int>(), e.at(1).get<int>(),
                    e.size() == 3 ? e.at(2).get<double>() : 1.0};
    edges.push_back(we);
  }
  return WeightedGraph(n, edges);
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw std::invalid_argument("malformed graph file " + path + ": " + ex.what());
  }
  return graph_from_json(j);
}

Json to_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const auto& nb : g.neighbors(v))
      if (nb.vertex >= v) edges.push_back({v, nb.vertex, nb.weight});
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

Json to_json(const VertexSet& s) { return Json(s.ids()); }

Json to_json(const PartitionPair& p) {
  return Json{{"v1", p.v1.ids()},        {"v2", p.v2.ids()},
              {"cross", p.cross},        {"internal1", p.internal1},
              {"internal2", p.internal2},{"vol1", p.vol1},
              {"vol2", p.vol2},          {"boundary", p.boundary}};
}

Json to_json(const SpectralResult& r) {
  return Json{{"eigenvalues", r.eigenvalues},
              {"residual", r.max_residual},
              {"lambda1", r.lambda1()},
              {"lambdamax", r.lambda_max()}};
}

Json to_json(const IsoperimetricResult& r) {
  Json j{{"value", r.value},
         {"method", r.method == SearchMethod::Exact ? "exact" : "heuristic"},
         {"candidates", r.candidates},
         {"witness", r.witness.ids()}};
  if (r.pair_witness) j["pair_witness"] = to_json(*r.pair_witness);
  return j;
}

Json to_json(const CheegerPairReport& r) {
  Json ineq = Json::object();
  for (const auto& c : r.inequalities)
    ineq[c.name] = Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.holds}, {"margin", c.margin}};
  Json j{{"h", r.h},
         {"hbar", r.hbar},
         {"lambda1", r.lambda1},
         {"lambdamax", r.lambda_max},
         {"loopless", r.loopless},
         {"method", r.h_result.method == SearchMethod::Exact ? "exact" : "heuristic"},
         {"witness_h", r.h_result.witness.ids()}};
  if (r.hbar_result.pair_witness)
    j["witness_hbar"] = Json::array({r.hbar_result.pair_witness->v1.ids(),
                                     r.hbar_result.pair_witness->v2.ids()});
  j["inequalities"] = ineq;
  return j;
}

Json to_json(const ComparisonReport& r) {
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    Json jb{{"name", b.name},
            {"kind", b.kind},
            {"quantity", b.quantity},
            {"bound", b.bound},
            {"holds", b.holds}};
    if (b.actual) jb["actual"] = *b.actual;
    if (b.actual) jb["slack"] = (b.kind == "lower") ? *b.actual - b.bound : b.bound - *b.actual;
    bounds.push_back(jb);
  }
  Json j{{"center", r.center},
         {"radius", r.radius},
         {"ball_size", r.ball_size},
         {"kappa", r.kappa_value},
         {"clustering", r.clustering_value},
         {"clustering_exact", r.clustering_exact}};
  if (r.l_sup) j["l_sup"] = *r.l_sup;
  if (r.l_inf) j["l_inf"] = *r.l_inf;
  if (r.actual_lambda1) j["lambda1"] = *r.actual_lambda1;
  if (r.actual_lambda_max) j["lambdamax"] = *r.actual_lambda_max;
  j["bounds"] = bounds;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ExhaustionReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr{{"n", row.n},
            {"size", row.omega_size},
            {"lambda1", row.lambda1},
            {"lambdamax", row.lambda_max}};
    if (row.h) jr["h"] = *row.h;
    if (row.hbar) jr["hbar"] = *row.hbar;
    if (row.overlay_lambda1) jr["overlay_lambda1"] = *row.overlay_lambda1;
    if (row.overlay_lambda_max) jr["overlay_lambdamax"] = *row.overlay_lambda_max;
    rows.push_back(jr);
  }
  auto est = [](const Estimate& e) {
    return Json{{"value", e.value},
                {"sidedness", to_string(e.side)},
                {"source", e.source},
                {"converged", e.converged}};
  };
  return Json{{"family", r.family},
              {"params", r.params},
              {"rows", rows},
              {"monotone",
               Json{{"lambda1_nonincreasing", r.lambda1_nonincreasing},
                    {"lambdamax_nondecreasing", r.lambda_max_nondecreasing},
                    {"h_nonincreasing", r.h_nonincreasing},
                    {"hbar_nondecreasing", r.hbar_nondecreasing}}},
              {"lambda_bottom", est(r.lambda_bottom)},
              {"lambda_top", est(r.lambda_top)},
              {"h_rows", r.h_rows},
              {"hbar_rows", r.hbar_rows}};
}

Json to_json(const SpectrumBounds& r) {
  Json bounds = Json::array();
  for (const auto& b : r.bounds)
    bounds.push_back(Json{{"name", b.name},
                          {"quantity", b.quantity},
                          {"value", b.value},
                          {"sidedness", to_string(b.side)},
                          {"source", b.source}});
  return Json{{"bounds", bounds}, {"suppressed", r.suppressed}};
}

Json to_json(const InfinityConstants& r) {
  Json probes = Json::array();
  for (const auto& p : r.probes) {
    Json jp{{"k", p.k},
            {"probe", p.probe.ids()},
            {"h_upper", p.h_upper},
            {"h_witness", p.h_witness.ids()},
            {"hbar_lower", p.hbar_lower}};
    if (p.hbar_witness)
      jp["hbar_witness"] = Json::array({p.hbar_witness->v1.ids(), p.hbar_witness->v2.ids()});
    if (p.threshold) jp["threshold"] = *p.threshold;
    probes.push_back(jp);
  }
  auto est = [](const Estimate& e) {
    return Json{{"value", e.value},
                {"sidedness", to_string(e.side)},
                {"source", e.source}};
  };
  Json j{{"family", r.family},
         {"probes", probes},
         {"h_inf", est(r.h_inf)},
         {"hbar_inf", est(r.hbar_inf)},
         {"concentration_verdict", r.concentration_verdict}};
  if (r.declared_band)
    j["declared_band"] = Json{{"lower", r.declared_band->lower},
                              {"upper", r.declared_band->upper},
                              {"source", r.declared_band->source}};
  return j;
}

Json to_json(const TraceBoundReport& r) {
  return Json{{"deleted_radius", r.deleted_radius},
              {"omega_size", r.omega_size},
              {"lambdamax", r.lambda_max},
              {"trace", r.trace},
              {"tail_sum", r.tail_sum},
              {"tail_bound", r.tail_bound},
              {"holds", r.holds}};
}

Json to_json(const VolumeGrowthReport& r) {
  return Json{{"r_max", r.r_max},
              {"lateral_ratio", r.lateral_ratio},
              {"lateral_series", r.lateral_series},
              {"lateral_to_outward", r.lateral_to_outward},
              {"fitted_rate", r.fitted_rate},
              {"fitted_scale", r.fitted_scale},
              {"hypothesis_checked", r.hypothesis_checked},
              {"hypothesis_holds", r.hypothesis_holds},
              {"growth_asserted", r.growth_asserted},
              {"notes", r.notes}};
}

Json family_manifest(const GraphFamily& f) {
  const auto& md = f.metadata();
  Json j{{"name", f.name()},
         {"params", f.params()},
         {"vertices", f.graph().vertex_count()},
         {"base_vertex", f.base_vertex()},
         {"safe_radius", f.safe_radius()},
         {"max_exhaustion", f.max_exhaustion()},
         {"bipartite", md.bipartite},
         {"has_loops", md.has_loops}};
  if (md.declared_tail)
    j["declared_tail"] = Json{{"m_minus_inf", md.declared_tail->m_minus_inf},
                              {"kappa_inf", md.declared_tail->kappa_inf}};
  if (md.hbar_upper) j["hbar_upper"] = *md.hbar_upper;
  j["concentration_schedule"] = md.concentration_threshold ? "2/(k+2)" : "none";
  return j;
}

std::string infinity_csv(const InfinityConstants& r) {
  std::ostringstream out;
  out << "k,h_upper,hbar_lower,threshold\n";
  out.precision(17);
  for (const auto& p : r.probes) {
    out << p.k << ',' << p.h_upper << ',' << p.hbar_lower << ',';
    if (p.threshold) out << *p.threshold;
    out << '\n';
  }
  return out.str();
}

std::string exhaustion_csv(const ExhaustionReport& r) {
  std::ostringstream out;
  out << "n,size,lambda1,lambdamax,h,hbar,overlay_lambda1,overlay_lambdamax\n";
  out.precision(17);
  for (const auto& row : r.rows) {
    out << row.n << ',' << row.omega_size << ',' << row.lambda1 << ',' << row.lambda_max << ',';
    if (row.h) out << *row.h;
    out << ',';
    if (row.hbar) out << *row.hbar;
    out << ',';
    if (row.overlay_lambda1) out << *row.overlay_lambda1;
    out << ',';
    if (row.overlay_lambda_max) out << *row.overlay_lambda_max;
    out << '\n';
  }
  return out.str();
}

}  // namespace graphspec
