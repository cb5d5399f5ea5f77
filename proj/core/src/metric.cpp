#include "graphspec/metric.hpp"

#include <stdexcept>

namespace graphspec {

VertexSet ball(const WeightedGraph& g, int x0, int radius) {
  auto dist = g.distances_from(x0);
  std::vector<int> ids;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[static_cast<size_t>(v)] >= 0 && dist[static_cast<size_t>(v)] <= radius)
      ids.push_back(v);
  return VertexSet(std::move(ids));
}

SphereProfile sphere_profile(const WeightedGraph& g, int x0, int r_max) {
  if (r_max < 0) throw std::invalid_argument("negative radius");
  auto dist = g.distances_from(x0);
  SphereProfile prof;
  prof.center = x0;
  prof.r_max = r_max;
  prof.sphere_size.assign(static_cast<size_t>(r_max) + 1, 0);
  prof.p.assign(static_cast<size_t>(r_max) + 1, 0.0);
  prof.q.assign(static_cast<size_t>(r_max) + 1, 0.0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int dv = dist[static_cast<size_t>(v)];
    if (dv < 0 || dv > r_max) continue;
    prof.sphere_size[static_cast<size_t>(dv)] += 1;
    for (const auto& nb : g.neighbors(v)) {
      int dn = dist[static_cast<size_t>(nb.vertex)];
      if (dn == dv + 1) prof.p[static_cast<size_t>(dv)] += nb.weight;
      else if (dn == dv) prof.q[static_cast<size_t>(dv)] += nb.weight;
    }
  }
  prof.cumulative_p.resize(prof.p.size());
  prof.cumulative_q.resize(prof.q.size());
  prof.ball_volume.assign(prof.p.size(), 0.0);
  double cp = 0.0, cq = 0.0;
  for (size_t r = 0; r < prof.p.size(); ++r) {
    cp += prof.p[r];
    cq += prof.q[r];
    prof.cumulative_p[r] = cp;
    prof.cumulative_q[r] = cq;
  }
  std::vector<double> sphere_vol(static_cast<size_t>(r_max) + 1, 0.0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int dv = dist[static_cast<size_t>(v)];
    if (dv >= 0 && dv <= r_max) sphere_vol[static_cast<size_t>(dv)] += g.measure(v);
  }
  double vol = 0.0;
  for (size_t r = 0; r < prof.p.size(); ++r) {
    vol += sphere_vol[r];
    prof.ball_volume[r] = vol;
  }
  return prof;
}

RadialSplit radial_split(const WeightedGraph& g, int x0, int x) {
  auto dist = g.distances_from(x0);
  if (dist[static_cast<size_t>(x)] < 0)
    throw std::invalid_argument("vertex unreachable from reference point");
  RadialSplit s;
  int dx = dist[static_cast<size_t>(x)];
  for (const auto& nb : g.neighbors(x)) {
    if (nb.vertex == x) {
      s.lateral += nb.weight;
      continue;
    }
    int dn = dist[static_cast<size_t>(nb.vertex)];
    if (dn == dx + 1) s.outward += nb.weight;
    else if (dn == dx - 1) s.inward += nb.weight;
    else s.lateral += nb.weight;
  }
  return s;
}

std::vector<RadialSplit> radial_splits(const WeightedGraph& g, int x0) {
  auto dist = g.distances_from(x0);
  std::vector<RadialSplit> out(static_cast<size_t>(g.vertex_count()));
  for (int x = 0; x < g.vertex_count(); ++x) {
    int dx = dist[static_cast<size_t>(x)];
    if (dx < 0) continue;
    RadialSplit& s = out[static_cast<size_t>(x)];
    for (const auto& nb : g.neighbors(x)) {
      if (nb.vertex == x) {
        s.lateral += nb.weight;
        continue;
      }
      int dn = dist[static_cast<size_t>(nb.vertex)];
      if (dn == dx + 1) s.outward += nb.weight;
      else if (dn == dx - 1) s.inward += nb.weight;
      else s.lateral += nb.weight;
    }
  }
  return out;
}

}  // namespace graphspec
