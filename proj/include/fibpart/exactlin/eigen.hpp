#pragma once

/**
 * @file eigen.hpp
 * @brief Spectral radii of nonnegative matrices and 2x2 spectral norms.
 *
 * Power iteration runs on the shifted matrix M + I, which has the same
 * eigenvectors, keeps every iterate strictly positive and removes the
 * oscillation that periodic or bipartite dependency graphs would cause.
 * For nonnegative M, rho(M + I) = rho(M) + 1.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "charpoly.hpp"
#include "matrix.hpp"
#include "roots.hpp"
#include "sparse.hpp"

namespace fibpart {

struct PowerIterationOptions {
  double tol = 1e-12;                     // on the relative residual ||vM - rho v|| / ||v||
  std::size_t max_iterations = 200'000;
};

struct SpectralEstimate {
  double value = 0;
  double residual = 0;
  std::size_t iterations = 0;
};

/// Left (row-vector) power iteration for a nonnegative sparse matrix.
template <class T>
SpectralEstimate power_iteration(const SparseMatrix<T>& m, const PowerIterationOptions& opt = {}) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power_iteration: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : m.row(i))
      if (e.value < 0) throw std::invalid_argument("power_iteration: matrix has a negative entry");

  std::vector<double> v(n, 1.0 / static_cast<double>(n)), w(n);
  SpectralEstimate best{0, INFINITY, 0};
  for (std::size_t it = 1; it <= opt.max_iterations; ++it) {
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double vi = v[i];
      if (vi == 0) continue;
      for (const auto& e : m.row(i)) w[e.col] += vi * static_cast<double>(e.value);
    }
    const double sum_v = std::accumulate(v.begin(), v.end(), 0.0);
    const double sum_w = std::accumulate(w.begin(), w.end(), 0.0);
    const double rho = sum_w / sum_v;
    double res2 = 0, norm2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = w[i] - rho * v[i];
      res2 += r * r;
      norm2 += v[i] * v[i];
    }
    const double residual = std::sqrt(res2 / norm2) / std::max(1.0, rho);
    if (residual < best.residual) best = {rho, residual, it};
    if (residual <= opt.tol) return {rho, residual, it};
    // v <- v (M + I), renormalized to unit sum.
    const double scale = 1.0 / (sum_w + sum_v);
    for (std::size_t i = 0; i < n; ++i) v[i] = (w[i] + v[i]) * scale;
  }
  throw NonConvergence("power iteration did not converge", best.value, best.residual);
}

inline SparseMatrix<double> to_sparse_real(const IntMatrix& m) {
  std::vector<Triplet<double>> t;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) t.push_back({i, j, m(i, j).get_d()});
  return SparseMatrix<double>(m.rows(), m.cols(), std::move(t));
}

inline SparseMatrix<double> to_sparse_real(const RealMatrix& m) {
  std::vector<Triplet<double>> t;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) t.push_back({i, j, m(i, j)});
  return SparseMatrix<double>(m.rows(), m.cols(), std::move(t));
}

inline constexpr std::size_t kExactSpectralMaxDim = 8;

/// rho of a nonnegative integer matrix as a certified root: for such matrices
/// rho is itself an eigenvalue, hence the greatest real root of det(XI - M).
inline CertifiedRoot spectral_radius_certified(const IntMatrix& m, const Rational& precision = default_root_precision()) {
  if (!m.is_square()) throw std::invalid_argument("spectral_radius: matrix is not square");
  if (!m.is_nonnegative()) throw std::invalid_argument("spectral_radius: matrix has a negative entry");
  return greatest_real_root(char_poly(m), precision);
}

/// Small matrices take the exact characteristic-polynomial path.
inline double spectral_radius_float(const IntMatrix& m, double tol = 1e-12) {
  if (!m.is_square()) throw std::invalid_argument("spectral_radius: matrix is not square");
  if (m.rows() <= kExactSpectralMaxDim) {
    Rational precision(tol);
    if (precision <= 0) precision = default_root_precision();
    return spectral_radius_certified(m, precision).value();
  }
  return power_iteration(to_sparse_real(m), {tol}).value;
}

inline double spectral_radius_float(const RealMatrix& m, double tol = 1e-12) {
  if (!m.is_square()) throw std::invalid_argument("spectral_radius: matrix is not square");
  return power_iteration(to_sparse_real(m), {tol}).value;
}

inline double spectral_radius_float(const SparseIntMatrix& m, double tol = 1e-12) {
  return power_iteration(m, {tol}).value;
}

/// Largest singular value of a real 2x2 matrix from the eigenvalues of A^T A.
inline double spectral_norm_2x2(const RealMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("spectral_norm_2x2: need a 2x2 matrix");
  const double p = a(0, 0) * a(0, 0) + a(1, 0) * a(1, 0);
  const double q = a(0, 0) * a(0, 1) + a(1, 0) * a(1, 1);
  const double r = a(0, 1) * a(0, 1) + a(1, 1) * a(1, 1);
  const double half_trace = 0.5 * (p + r);
  const double disc = std::sqrt(0.25 * (p - r) * (p - r) + q * q);
  return std::sqrt(half_trace + disc);
}

inline double spectral_norm_2x2(const IntMatrix& a) { return spectral_norm_2x2(to_real(a)); }

}  // namespace fibpart
