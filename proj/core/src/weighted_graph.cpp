#include "graphspec/weighted_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace graphspec {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int first, int last) {
  std::vector<int> ids;
  ids.reserve(static_cast<size_t>(std::max(0, last - first)));
  for (int v = first; v < last; ++v) ids.push_back(v);
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::unioned(const VertexSet& other) const {
  VertexSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
  return intersect(other).empty();
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.ids().begin(), a.ids().end(),
                                      b.ids().begin(), b.ids().end());
}

WeightedGraph::WeightedGraph(int vertex_count, const std::vector<WeightedEdge>& edges)
    : adj_(static_cast<size_t>(vertex_count)),
      measure_(static_cast<size_t>(vertex_count), 0.0),
      loop_(static_cast<size_t>(vertex_count), 0.0) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (!(e.weight > 0.0))
      throw std::invalid_argument("edge weight must be strictly positive");
    if (e.u == e.v) {
      if (loop_[static_cast<size_t>(e.u)] > 0.0)
        throw std::invalid_argument("duplicate self-loop");
      adj_[static_cast<size_t>(e.u)].push_back({e.u, e.weight});
      loop_[static_cast<size_t>(e.u)] = e.weight;
      has_loops_ = true;
    } else {
      adj_[static_cast<size_t>(e.u)].push_back({e.v, e.weight});
      adj_[static_cast<size_t>(e.v)].push_back({e.u, e.weight});
    }
    ++edge_count_;
    total_edge_weight_ += e.weight;
  }
  for (size_t v = 0; v < adj_.size(); ++v) {
    auto& nbrs = adj_[v];
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    for (size_t i = 1; i < nbrs.size(); ++i)
      if (nbrs[i].vertex == nbrs[i - 1].vertex)
        throw std::invalid_argument("duplicate edge");
    double mu = 0.0;
    for (const auto& nb : nbrs) mu += nb.weight;
    measure_[v] = mu;
    total_measure_ += mu;
  }
}

std::span<const Neighbor> WeightedGraph::neighbors(int v) const {
  return adj_[static_cast<size_t>(v)];
}

double WeightedGraph::edge_weight(int u, int v) const {
  const auto& nbrs = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& nb, int x) { return nb.vertex < x; });
  if (it != nbrs.end() && it->vertex == v) return it->weight;
  return 0.0;
}

int WeightedGraph::degree(int v) const {
  int d = static_cast<int>(adj_[static_cast<size_t>(v)].size());
  if (loop_[static_cast<size_t>(v)] > 0.0) --d;
  return d;
}

int WeightedGraph::max_degree() const {
  int d = 0;
  for (int v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
  return d;
}

bool WeightedGraph::has_loop_in(const VertexSet& s) const {
  for (int v : s)
    if (loop_[static_cast<size_t>(v)] > 0.0) return true;
  return false;
}

bool WeightedGraph::is_connected() const {
  if (vertex_count() == 0) return true;
  auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool WeightedGraph::is_connected_on(const VertexSet& s) const {
  if (s.empty()) return true;
  std::vector<char> in(static_cast<size_t>(vertex_count()), 0);
  for (int v : s) in[static_cast<size_t>(v)] = 1;
  std::vector<char> seen(static_cast<size_t>(vertex_count()), 0);
  std::queue<int> q;
  q.push(s[0]);
  seen[static_cast<size_t>(s[0])] = 1;
  int reached = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++reached;
    for (const auto& nb : neighbors(v)) {
      if (nb.vertex == v) continue;
      if (in[static_cast<size_t>(nb.vertex)] && !seen[static_cast<size_t>(nb.vertex)]) {
        seen[static_cast<size_t>(nb.vertex)] = 1;
        q.push(nb.vertex);
      }
    }
  }
  return reached == s.size();
}

std::vector<int> WeightedGraph::distances_from(int v) const {
  std::vector<int> dist(static_cast<size_t>(vertex_count()), -1);
  std::queue<int> q;
  dist[static_cast<size_t>(v)] = 0;
  q.push(v);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (const auto& nb : neighbors(x)) {
      if (nb.vertex == x) continue;
      if (dist[static_cast<size_t>(nb.vertex)] < 0) {
        dist[static_cast<size_t>(nb.vertex)] = dist[static_cast<size_t>(x)] + 1;
        q.push(nb.vertex);
      }
    }
  }
  return dist;
}

int WeightedGraph::diameter() const {
  int d = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    auto dist = distances_from(v);
    for (int x : dist) {
      if (x < 0) throw std::invalid_argument("diameter of a disconnected graph");
      d = std::max(d, x);
    }
  }
  return d;
}

VertexSet WeightedGraph::all_vertices() const {
  return VertexSet::range(0, vertex_count());
}

double volume(const WeightedGraph& g, const VertexSet& s) {
  double v = 0.0;
  for (int x : s) v += g.measure(x);
  return v;
}

double cut_measure(const WeightedGraph& g, const VertexSet& a, const VertexSet& b) {
  double sum = 0.0;
  for (int x : a)
    for (const auto& nb : g.neighbors(x))
      if (b.contains(nb.vertex)) sum += nb.weight;
  return sum;
}

double boundary_measure(const WeightedGraph& g, const VertexSet& s) {
  double sum = 0.0;
  for (int x : s)
    for (const auto& nb : g.neighbors(x))
      if (!s.contains(nb.vertex)) sum += nb.weight;
  return sum;
}

PartitionPair PartitionPair::compute(const WeightedGraph& g, VertexSet v1, VertexSet v2) {
  if (v1.empty() || v2.empty())
    throw std::invalid_argument("partition parts must be nonempty");
  if (!v1.disjoint_from(v2))
    throw std::invalid_argument("partition parts must be disjoint");
  PartitionPair p;
  p.cross = cut_measure(g, v1, v2);
  p.internal1 = cut_measure(g, v1, v1);
  p.internal2 = cut_measure(g, v2, v2);
  p.vol1 = volume(g, v1);
  p.vol2 = volume(g, v2);
  p.boundary = boundary_measure(g, v1.unioned(v2));
  p.v1 = std::move(v1);
  p.v2 = std::move(v2);
  return p;
}

}  // namespace graphspec
