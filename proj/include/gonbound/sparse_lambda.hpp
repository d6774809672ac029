#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <memory>
#include <vector>

#include "gonbound/errors.hpp"
#include "gonbound/jacobi.hpp"
#include "gonbound/rng.hpp"

namespace gonbound {

/// Generalized pencil K x = lambda M x with K symmetric positive
/// semidefinite whose null space is spanned by the constant vector, and M a
/// positive diagonal mass. Covers both large discrete Laplacians (M = I) and
/// the lumped finite-difference metric Laplacian.
struct SparsePencil {
  Eigen::SparseMatrix<double> stiffness;
  Eigen::VectorXd mass; // diagonal
};

struct PencilEigenpair {
  double value = 0;
  std::vector<double> vector; // M-normalized, M-orthogonal to constants
};

/// Smallest nonzero eigenvalue by deflated block inverse iteration: factor
/// K + sigma*M once (twice after the shift is re-centered), iterate a small
/// block, project constants out in the M-inner product, and read the lowest
/// Ritz value. Deterministic start vectors.
inline PencilEigenpair smallest_nonzero_eigenvalue(const SparsePencil& p, double rel_tol = 1e-12,
                                                   int max_iters = 6000) {
  const int n = static_cast<int>(p.mass.size());
  if (n < 2) throw validation_error("pencil solver: need at least two nodes");
  const int b = std::min(4, n - 1);

  Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  const double total_mass = p.mass.sum();
  auto deflate = [&](Eigen::VectorXd& x) {
    double mean = p.mass.dot(x) / total_mass;
    x -= mean * ones;
  };
  auto m_dot = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y) { return x.dot(p.mass.asDiagonal() * y); };

  Eigen::MatrixXd X(n, b);
  uint64_t state = 0x5eed5eed5eedULL;
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = to_unit_double(splitmix64_next(state)) - 0.5;

  auto orthonormalize = [&](Eigen::MatrixXd& Y) {
    for (int j = 0; j < b; ++j) {
      Eigen::VectorXd col = Y.col(j);
      deflate(col);
      for (int k = 0; k < j; ++k) {
        Eigen::VectorXd prev = Y.col(k);
        col -= m_dot(prev, col) * prev;
      }
      double nrm = std::sqrt(std::max(m_dot(col, col), 0.0));
      if (nrm < 1e-200) {
        // regenerate a stale direction deterministically
        for (int i = 0; i < n; ++i) col(i) = to_unit_double(splitmix64_next(state)) - 0.5;
        deflate(col);
        for (int k = 0; k < j; ++k) {
          Eigen::VectorXd prev = Y.col(k);
          col -= m_dot(prev, col) * prev;
        }
        nrm = std::sqrt(std::max(m_dot(col, col), 1e-300));
      }
      Y.col(j) = col / nrm;
    }
  };

  auto ritz_smallest = [&](const Eigen::MatrixXd& Y, Eigen::VectorXd* vec_out) {
    Eigen::MatrixXd B = Y.transpose() * (p.stiffness * Y);
    DenseSymMatrix small(b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) small.at(i, j) = 0.5 * (B(i, j) + B(j, i));
    auto eig = jacobi_eigensolve(small, vec_out != nullptr);
    if (vec_out) {
      Eigen::VectorXd coeff(b);
      for (int i = 0; i < b; ++i) coeff(i) = eig.vectors[0][i];
      *vec_out = Y * coeff;
    }
    return eig.values[0];
  };

  double sigma = 1.0;
  Eigen::SparseMatrix<double> A = p.stiffness;
  Eigen::VectorXd mdiag = p.mass;
  auto factor_with = [&](double s) {
    Eigen::SparseMatrix<double> shifted = p.stiffness;
    Eigen::SparseMatrix<double> massm(n, n);
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(n);
    for (int i = 0; i < n; ++i) trips.emplace_back(i, i, s * mdiag(i));
    massm.setFromTriplets(trips.begin(), trips.end());
    shifted += massm;
    auto solver = std::make_unique<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>();
    solver->compute(shifted);
    if (solver->info() != Eigen::Success)
      throw iteration_limit_error("pencil solver: factorization failed");
    return solver;
  };
  auto solver = factor_with(sigma);

  orthonormalize(X);
  double prev = -1;
  int stable = 0;
  Eigen::VectorXd best_vec;
  for (int it = 0; it < max_iters; ++it) {
    Eigen::MatrixXd Y(n, b);
    for (int j = 0; j < b; ++j) Y.col(j) = solver->solve((p.mass.asDiagonal() * X.col(j)).eval());
    orthonormalize(Y);
    X = Y;
    double ritz = ritz_smallest(X, nullptr);
    if (it == 10) {
      // re-center the shift near the target once a rough estimate exists
      double s2 = std::max(ritz / 4.0, 1e-14);
      if (std::abs(s2 - sigma) / sigma > 0.5) {
        sigma = s2;
        solver = factor_with(sigma);
      }
    }
    if (prev >= 0 && std::abs(ritz - prev) <= rel_tol * std::max(std::abs(ritz), 1e-30)) {
      if (++stable >= 3) {
        ritz_smallest(X, &best_vec);
        PencilEigenpair out;
        out.value = ritz;
        out.vector.assign(best_vec.data(), best_vec.data() + n);
        return out;
      }
    } else {
      stable = 0;
    }
    prev = ritz;
  }
  throw iteration_limit_error("pencil solver: inverse iteration did not converge");
}

} // namespace gonbound
