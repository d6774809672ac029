#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <variant>
#include <vector>

#include "gonbound/graph.hpp"
#include "gonbound/rational.hpp"

namespace gonbound {

/// A point of the metric graph: either a model vertex, or an interior point
/// of an edge given by an exact offset from the smaller-named endpoint.
/// Canonical form: the edge variant never has offset 0 or offset = length.
struct PointOnGraph {
  int vertex = -1; // >= 0 when the point is a model vertex
  int edge = -1;   // >= 0 when interior to an edge
  Rat offset;      // distance from the edge's smaller endpoint, in (0, length)

  static PointOnGraph at_vertex(int v) {
    PointOnGraph p;
    p.vertex = v;
    return p;
  }
  static PointOnGraph on_edge(int e, Rat off) {
    PointOnGraph p;
    p.edge = e;
    p.offset = std::move(off);
    return p;
  }
  bool is_vertex() const { return vertex >= 0; }
};

/// A simple graph model together with exact positive rational edge lengths.
class MetricGraph {
public:
  MetricGraph() = default;

  MetricGraph(SimpleGraph model, std::vector<Rat> lengths)
      : model_(std::move(model)), lengths_(std::move(lengths)) {
    if (static_cast<int>(lengths_.size()) != model_.edge_count())
      throw validation_error("length list does not match edge count");
    for (std::size_t i = 0; i < lengths_.size(); ++i)
      if (lengths_[i] <= 0)
        throw validation_error("edge " + edge_id(static_cast<int>(i)) + " has non-positive length");
  }

  const SimpleGraph& model() const { return model_; }
  const Rat& length(int e) const { return lengths_[e]; }
  const std::vector<Rat>& lengths() const { return lengths_; }

  /// Total length. Always recomputed; never cached.
  Rat mu() const {
    Rat total = 0;
    for (const auto& l : lengths_) total += l;
    return total;
  }

  int d_max() const { return model_.max_degree(); }

  /// Minimum edge length of this model (the model-level l_min).
  Rat min_edge_length() const {
    Rat m = lengths_.empty() ? Rat(0) : lengths_[0];
    for (const auto& l : lengths_) m = std::min(m, l);
    return m;
  }

  std::string edge_id(int e) const {
    const auto& [u, v] = model_.edges()[e];
    return model_.name(u) + "~" + model_.name(v);
  }

  std::optional<int> edge_by_id(const std::string& id) const {
    auto sep = id.find('~');
    if (sep == std::string::npos) return std::nullopt;
    auto u = model_.index_of(id.substr(0, sep));
    auto v = model_.index_of(id.substr(sep + 1));
    if (!u || !v) return std::nullopt;
    return model_.edge_index(*u, *v);
  }

private:
  SimpleGraph model_;
  std::vector<Rat> lengths_;
};

inline bool operator==(const MetricGraph& a, const MetricGraph& b) {
  return a.model() == b.model() && a.lengths() == b.lengths();
}

/// Model vertices of valence != 2. Degree-2 model vertices are ordinary
/// points of the metric graph.
inline std::vector<int> essential_vertices(const MetricGraph& metric) {
  std::vector<int> out;
  for (int v = 0; v < metric.model().vertex_count(); ++v)
    if (metric.model().degree(v) != 2) out.push_back(v);
  return out;
}

/// Exact Dijkstra over the metric from a source vertex, optionally with one
/// edge removed (used for shortest cycles through a vertex).
inline std::vector<std::optional<Rat>> metric_distances(const MetricGraph& metric, int source,
                                                        int skip_edge = -1) {
  const auto& g = metric.model();
  std::vector<std::optional<Rat>> dist(g.vertex_count());
  // (distance, vertex) min-heap via sorted set semantics on a vector heap
  using Item = std::pair<Rat, int>;
  auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  heap.push({Rat(0), source});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (dist[v] && *dist[v] <= d) continue;
    dist[v] = d;
    for (int u : g.neighbors(v)) {
      int e = *g.edge_index(v, u);
      if (e == skip_edge) continue;
      Rat nd = d + metric.length(e);
      if (!dist[u] || nd < *dist[u]) heap.push({nd, u});
    }
  }
  return dist;
}

/// Minimum geodesic length between distinct essential vertices, together with
/// the shortest nontrivial cycle through an essential vertex. Empty when the
/// graph has no essential vertex (a circle).
inline std::optional<Rat> geodesic_l_min(const MetricGraph& metric) {
  auto ess = essential_vertices(metric);
  if (ess.empty()) return std::nullopt;
  std::optional<Rat> best;
  auto consider = [&](const Rat& r) {
    if (!best || r < *best) best = r;
  };
  std::vector<char> essential(metric.model().vertex_count(), 0);
  for (int v : ess) essential[v] = 1;
  for (int v : ess) {
    auto dist = metric_distances(metric, v);
    for (int u : ess)
      if (u > v && dist[u]) consider(*dist[u]);
    // shortest cycle through v: leave along e, return without using e
    for (int u : metric.model().neighbors(v)) {
      int e = *metric.model().edge_index(v, u);
      auto back = metric_distances(metric, u, e);
      if (back[v]) consider(metric.length(e) + *back[v]);
    }
  }
  return best;
}

/// Every edge length multiplied by beta > 0.
inline MetricGraph rescale(const MetricGraph& metric, const Rat& beta) {
  if (beta <= 0) throw validation_error("rescale factor must be positive");
  std::vector<Rat> lengths = metric.lengths();
  for (auto& l : lengths) l *= beta;
  return MetricGraph(metric.model(), std::move(lengths));
}

/// Result of refining a model at interior points: the refined metric graph
/// plus, for every refined-model vertex, its location on the original graph.
struct SubdividedMetric {
  MetricGraph graph;
  std::vector<PointOnGraph> locations; // indexed by refined-model vertex index
};

/// Refine the model at the given edge-interior points. Lengths partition
/// exactly; the total length is untouched. Points that coincide with a model
/// vertex or with each other are rejected.
inline SubdividedMetric subdivide(const MetricGraph& metric, const std::vector<PointOnGraph>& points) {
  const auto& g = metric.model();
  std::vector<std::vector<Rat>> cuts(metric.lengths().size());
  for (const auto& p : points) {
    if (p.is_vertex())
      throw validation_error("subdivision point coincides with vertex '" + g.name(p.vertex) + "'");
    if (p.edge < 0 || p.edge >= g.edge_count()) throw validation_error("subdivision point on unknown edge");
    if (p.offset <= 0 || p.offset >= metric.length(p.edge))
      throw validation_error("subdivision point at offset " + format_rat(p.offset) + " is not interior to edge " +
                             metric.edge_id(p.edge));
    cuts[p.edge].push_back(p.offset);
  }
  GraphData data;
  std::vector<Rat> lengths_by_key; // aligned with data.edges
  std::map<std::string, PointOnGraph> location_by_name;
  for (int v = 0; v < g.vertex_count(); ++v) {
    data.vertices.push_back(g.name(v));
    location_by_name[g.name(v)] = PointOnGraph::at_vertex(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto& offs = cuts[e];
    std::sort(offs.begin(), offs.end());
    for (std::size_t i = 1; i < offs.size(); ++i)
      if (offs[i] == offs[i - 1])
        throw validation_error("duplicate subdivision point at offset " + format_rat(offs[i]) + " on edge " +
                               metric.edge_id(e));
    const auto& [u, v] = g.edges()[e];
    std::vector<std::string> chain{g.name(u)};
    for (const auto& off : offs) {
      std::string name = metric.edge_id(e) + "@" + format_rat(off);
      data.vertices.push_back(name);
      location_by_name[name] = PointOnGraph::on_edge(e, off);
      chain.push_back(name);
    }
    chain.push_back(g.name(v));
    std::vector<Rat> bounds{Rat(0)};
    for (const auto& off : offs) bounds.push_back(off);
    bounds.push_back(metric.length(e));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      data.edges.emplace_back(chain[i], chain[i + 1]);
      lengths_by_key.push_back(bounds[i + 1] - bounds[i]);
    }
  }
  SimpleGraph refined(data);
  // reorder lengths to the refined graph's canonical edge order
  std::map<std::pair<int, int>, Rat> by_pair;
  for (std::size_t i = 0; i < data.edges.size(); ++i) {
    int a = refined.require_index(data.edges[i].first);
    int b = refined.require_index(data.edges[i].second);
    by_pair[std::minmax(a, b)] = lengths_by_key[i];
  }
  std::vector<Rat> lengths;
  for (const auto& pr : refined.edges()) lengths.push_back(by_pair.at(pr));

  SubdividedMetric out;
  out.graph = MetricGraph(std::move(refined), std::move(lengths));
  out.locations.resize(out.graph.model().vertex_count());
  for (int v = 0; v < out.graph.model().vertex_count(); ++v)
    out.locations[v] = location_by_name.at(out.graph.model().name(v));
  return out;
}

} // namespace gonbound
