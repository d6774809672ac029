#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "gonbound/errors.hpp"
#include "gonbound/graph.hpp"
#include "gonbound/jacobi.hpp"
#include "gonbound/sparse_lambda.hpp"

namespace gonbound {

/// Degree-minus-adjacency matrix in vertex order.
inline DenseSymMatrix laplacian_matrix(const SimpleGraph& g) {
  DenseSymMatrix m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m.at(v, v) = g.degree(v);
  for (const auto& [u, v] : g.edges()) {
    m.at(u, v) = -1;
    m.at(v, u) = -1;
  }
  return m;
}

struct SpectralOptions {
  double rel_tol = 1e-9;
  int dense_cap = 512; // full Jacobi decomposition up to here, iterative above
};

struct DiscreteSpectrum {
  double lambda1 = 0;
  std::vector<double> eigenvector; // empty when the iterative path was used without request
};

/// Smallest nonzero Laplacian eigenvalue (the spectral gap), with its
/// eigenvector when the dense path runs. Disconnected input is rejected:
/// lambda1 would be 0 and every downstream bound vacuous.
inline DiscreteSpectrum lambda1_discrete_full(const SimpleGraph& g, const SpectralOptions& opts = {}) {
  if (g.vertex_count() < 2) throw validation_error("lambda1: need at least two vertices");
  if (!g.is_connected()) throw validation_error("lambda1: graph is disconnected (lambda1 = 0)");
  DiscreteSpectrum out;
  if (g.vertex_count() <= opts.dense_cap) {
    auto eig = jacobi_eigensolve(laplacian_matrix(g), true, std::min(opts.rel_tol, 1e-11));
    out.lambda1 = eig.values[1];
    out.eigenvector = eig.vectors[1];
    return out;
  }
  SparsePencil p;
  const int n = g.vertex_count();
  p.mass = Eigen::VectorXd::Ones(n);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(4 * g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    trips.emplace_back(u, u, 1.0);
    trips.emplace_back(v, v, 1.0);
    trips.emplace_back(u, v, -1.0);
    trips.emplace_back(v, u, -1.0);
  }
  p.stiffness.resize(n, n);
  p.stiffness.setFromTriplets(trips.begin(), trips.end());
  auto pair = smallest_nonzero_eigenvalue(p, opts.rel_tol * 1e-3);
  out.lambda1 = pair.value;
  out.eigenvector = pair.vector;
  return out;
}

inline double lambda1_discrete(const SimpleGraph& g, const SpectralOptions& opts = {}) {
  return lambda1_discrete_full(g, opts).lambda1;
}

/// Test-function upper bound on the spectral gap:
/// (|E| - |E(Y)| - |E(Z)|) * (1/|Y| + 1/|Z|) for disjoint non-empty Y, Z.
inline double test_function_bound(const SimpleGraph& g, const std::vector<int>& Y, const std::vector<int>& Z) {
  if (Y.empty() || Z.empty()) throw validation_error("test_function_bound: Y and Z must be non-empty");
  std::set<int> ys(Y.begin(), Y.end()), zs(Z.begin(), Z.end());
  for (int v : ys)
    if (zs.count(v)) throw validation_error("test_function_bound: Y and Z overlap at '" + g.name(v) + "'");
  auto internal_edges = [&](const std::set<int>& s) {
    int count = 0;
    for (const auto& [u, v] : g.edges())
      if (s.count(u) && s.count(v)) ++count;
    return count;
  };
  double crossing = g.edge_count() - internal_edges(ys) - internal_edges(zs);
  return crossing * (1.0 / static_cast<double>(ys.size()) + 1.0 / static_cast<double>(zs.size()));
}

} // namespace gonbound
