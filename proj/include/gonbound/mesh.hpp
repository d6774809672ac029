#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "gonbound/errors.hpp"
#include "gonbound/metric_graph.hpp"
#include "gonbound/sparse_lambda.hpp"

namespace gonbound {

/// Finite-difference mesh over a metric graph: model vertices plus
/// equispaced interior nodes per edge, with a lumped (diagonal) mass.
struct Mesh {
  struct Segment {
    int a = 0, b = 0;
    double len = 0;
  };
  int node_count = 0;
  std::vector<Segment> segments;
  std::vector<double> mass;                  // lumped, by node
  std::vector<int> vertex_node;              // model vertex -> node id
  std::vector<std::vector<int>> edge_nodes;  // per edge: node chain u ... v
  std::vector<std::vector<double>> edge_off; // per edge: node offsets from u
  double h = 0;
};

/// Per edge of length L, ceil(L/h) equal sub-segments.
inline Mesh build_mesh(const MetricGraph& metric, const Rat& h) {
  if (h <= 0) throw validation_error("mesh: h must be positive");
  const auto& g = metric.model();
  Mesh mesh;
  mesh.h = to_double(h);
  mesh.vertex_node.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) mesh.vertex_node[v] = mesh.node_count++;
  mesh.edge_nodes.resize(g.edge_count());
  mesh.edge_off.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges()[e];
    const Rat L = metric.length(e);
    long n = to_long(rat_floor(L / h));
    if (Rat(n) * h < L) ++n; // ceil
    n = std::max<long>(n, 1);
    const double s = to_double(L) / static_cast<double>(n);
    std::vector<int>& chain = mesh.edge_nodes[e];
    std::vector<double>& off = mesh.edge_off[e];
    chain.push_back(mesh.vertex_node[u]);
    off.push_back(0.0);
    for (long i = 1; i < n; ++i) {
      chain.push_back(mesh.node_count++);
      off.push_back(s * static_cast<double>(i));
    }
    chain.push_back(mesh.vertex_node[v]);
    off.push_back(to_double(L));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) mesh.segments.push_back({chain[i], chain[i + 1], s});
  }
  mesh.mass.assign(mesh.node_count, 0.0);
  for (const auto& seg : mesh.segments) {
    if (seg.len <= 0) throw validation_error("mesh: zero-length segment");
    mesh.mass[seg.a] += seg.len / 2;
    mesh.mass[seg.b] += seg.len / 2;
  }
  if (mesh.node_count < 2) throw validation_error("mesh: need at least two nodes");
  return mesh;
}

/// Continuous piecewise-linear function represented by its mesh node values.
struct MeshFunction {
  Mesh mesh;
  std::vector<double> values;
};

/// Trapezoid-consistent Rayleigh quotient of the mesh interpolant, after
/// centering by the mass-weighted mean. A function that is constant after
/// centering has no quotient.
inline double rayleigh_quotient(const MeshFunction& f) {
  if (static_cast<int>(f.values.size()) != f.mesh.node_count)
    throw validation_error("rayleigh: value count does not match mesh");
  double total_mass = 0, weighted = 0;
  for (int i = 0; i < f.mesh.node_count; ++i) {
    total_mass += f.mesh.mass[i];
    weighted += f.mesh.mass[i] * f.values[i];
  }
  const double mean = weighted / total_mass;
  double num = 0, den = 0;
  for (const auto& seg : f.mesh.segments) {
    const double d = f.values[seg.b] - f.values[seg.a];
    num += d * d / seg.len;
  }
  for (int i = 0; i < f.mesh.node_count; ++i) {
    const double c = f.values[i] - mean;
    den += f.mesh.mass[i] * c * c;
  }
  if (den <= 1e-280) throw validation_error("rayleigh: function is constant after centering");
  return num / den;
}

struct MetricSpectrum {
  double lambda1 = 0;
  MeshFunction eigenfunction;
};

/// First nontrivial eigenvalue of the metric Laplacian via the lumped-mass
/// finite-difference pencil K x = lambda M x on the h-mesh. Converges at
/// O(h^2) to the continuum value.
inline MetricSpectrum lambda1_metric_full(const MetricGraph& metric, const Rat& h) {
  if (!metric.model().is_connected()) throw validation_error("lambda1_metric: metric graph is disconnected");
  Mesh mesh = build_mesh(metric, h);
  SparsePencil p;
  p.mass.resize(mesh.node_count);
  for (int i = 0; i < mesh.node_count; ++i) p.mass(i) = mesh.mass[i];
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(4 * mesh.segments.size());
  for (const auto& seg : mesh.segments) {
    const double w = 1.0 / seg.len;
    trips.emplace_back(seg.a, seg.a, w);
    trips.emplace_back(seg.b, seg.b, w);
    trips.emplace_back(seg.a, seg.b, -w);
    trips.emplace_back(seg.b, seg.a, -w);
  }
  p.stiffness.resize(mesh.node_count, mesh.node_count);
  p.stiffness.setFromTriplets(trips.begin(), trips.end());
  auto pair = smallest_nonzero_eigenvalue(p);
  MetricSpectrum out;
  out.lambda1 = pair.value;
  out.eigenfunction.mesh = std::move(mesh);
  out.eigenfunction.values = std::move(pair.vector);
  return out;
}

inline double lambda1_metric(const MetricGraph& metric, const Rat& h) {
  return lambda1_metric_full(metric, h).lambda1;
}

} // namespace gonbound
