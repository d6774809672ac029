#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gonbound/errors.hpp"

namespace gonbound {

/// Dense symmetric matrix, row-major. Only the algebra the spectral layer
/// needs.
struct DenseSymMatrix {
  int n = 0;
  std::vector<double> a;

  DenseSymMatrix() = default;
  explicit DenseSymMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct EigenDecomposition {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k]; empty when not requested
};

/// Cyclic-by-row Jacobi eigensolver. Rotations run until the off-diagonal
/// Frobenius mass falls below rel_tol times the matrix norm.
inline EigenDecomposition jacobi_eigensolve(DenseSymMatrix m, bool want_vectors, double rel_tol = 1e-12,
                                            int max_sweeps = 64) {
  const int n = m.n;
  std::vector<double> vflat;
  if (want_vectors) {
    vflat.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vflat[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += m.at(i, j) * m.at(i, j);
    return std::sqrt(2 * s);
  };
  double frob = 0;
  for (double x : m.a) frob += x * x;
  frob = std::sqrt(frob);
  const double stop = std::max(rel_tol * frob, 1e-300);

  int sweep = 0;
  while (off_norm() > stop) {
    if (++sweep > max_sweeps) throw iteration_limit_error("jacobi: sweep cap exceeded before convergence");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = m.at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        double theta = (m.at(q, q) - m.at(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1.0 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m.at(k, p), mkq = m.at(k, q);
          m.at(k, p) = c * mkp - s * mkq;
          m.at(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m.at(p, k), mqk = m.at(q, k);
          m.at(p, k) = c * mpk - s * mqk;
          m.at(q, k) = s * mpk + c * mqk;
        }
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            double vkp = vflat[static_cast<std::size_t>(k) * n + p];
            double vkq = vflat[static_cast<std::size_t>(k) * n + q];
            vflat[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
            vflat[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return m.at(i, i) < m.at(j, j); });
  EigenDecomposition out;
  out.values.reserve(n);
  for (int k : order) out.values.push_back(m.at(k, k));
  if (want_vectors) {
    out.vectors.assign(n, std::vector<double>(n));
    for (int dst = 0; dst < n; ++dst)
      for (int row = 0; row < n; ++row) out.vectors[dst][row] = vflat[static_cast<std::size_t>(row) * n + order[dst]];
  }
  return out;
}

} // namespace gonbound
