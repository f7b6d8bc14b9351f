#pragma once

// Compressed-sparse-row matrices for transition counts and Kronecker powers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "../bigint.hpp"
#include "matrix.hpp"

namespace fibpart {

template <class T>
struct Triplet {
  std::size_t row;
  std::size_t col;
  T value;
};

template <class T>
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    T value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMatrix() : row_start_(1, 0) {}

  /// Duplicate (row, col) pairs are summed; explicit zeros are dropped.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet<T>> triplets)
      : rows_(rows), cols_(cols) {
    for (const auto& t : triplets)
      if (t.row >= rows || t.col >= cols) throw std::out_of_range("SparseMatrix: triplet out of range");
    std::sort(triplets.begin(), triplets.end(),
              [](const auto& a, const auto& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    row_start_.assign(rows + 1, 0);
    for (std::size_t k = 0; k < triplets.size();) {
      std::size_t r = triplets[k].row, c = triplets[k].col;
      T sum = triplets[k].value;
      for (++k; k < triplets.size() && triplets[k].row == r && triplets[k].col == c; ++k) sum += triplets[k].value;
      if (sum != 0) {
        entries_.push_back(Entry{c, sum});
        ++row_start_[r + 1];
      }
    }
    for (std::size_t r = 0; r < rows; ++r) row_start_[r + 1] += row_start_[r];
  }

  static SparseMatrix from_dense(const Matrix<T>& m) {
    std::vector<Triplet<T>> t;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) t.push_back({i, j, m(i, j)});
    return SparseMatrix(m.rows(), m.cols(), std::move(t));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }

  std::span<const Entry> row(std::size_t i) const {
    return {entries_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]};
  }

  T at(std::size_t i, std::size_t j) const {
    for (const auto& e : row(i))
      if (e.col == j) return e.value;
    return T(0);
  }

  Matrix<T> to_dense() const {
    Matrix<T> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : row(i)) m(i, e.col) = e.value;
    return m;
  }

  std::vector<Triplet<T>> triplets() const {
    std::vector<Triplet<T>> t;
    t.reserve(entries_.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : row(i)) t.push_back({i, e.col, e.value});
    return t;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_start_ == b.row_start_ && a.entries_ == b.entries_;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("SparseMatrix +: shape mismatch");
    auto t = a.triplets();
    auto u = b.triplets();
    t.insert(t.end(), u.begin(), u.end());
    return SparseMatrix(a.rows_, a.cols_, std::move(t));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_start_;
  std::vector<Entry> entries_;
};

/// Exact small-integer sparse matrix; entries count automaton symbols.
using SparseIntMatrix = SparseMatrix<std::int64_t>;

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("sparse Kronecker entry overflows int64");
  return r;
}

template <class T>
SparseMatrix<T> kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  std::vector<Triplet<T>> t;
  t.reserve(a.nonzeros() * b.nonzeros());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& ea : a.row(i))
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (const auto& eb : b.row(k)) {
          T v;
          if constexpr (std::is_same_v<T, std::int64_t>)
            v = checked_mul(ea.value, eb.value);
          else
            v = ea.value * eb.value;
          t.push_back({i * b.rows() + k, ea.col * b.cols() + eb.col, v});
        }
  return SparseMatrix<T>(a.rows() * b.rows(), a.cols() * b.cols(), std::move(t));
}

template <class T>
SparseMatrix<T> kron_power(const SparseMatrix<T>& m, unsigned p) {
  if (p == 0) return SparseMatrix<T>(1, 1, {{0, 0, T(1)}});
  SparseMatrix<T> r = m;
  for (unsigned i = 1; i < p; ++i) r = kron(r, m);
  return r;
}

inline SparseIntMatrix to_sparse_int(const SmallMatrix4& m) {
  std::vector<Triplet<std::int64_t>> t;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (m[i][j]) t.push_back({i, j, m[i][j]});
  return SparseIntMatrix(4, 4, std::move(t));
}

inline SparseIntMatrix to_sparse_int(const IntMatrix& m) {
  std::vector<Triplet<std::int64_t>> t;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& v = m(i, j);
      if (v == 0) continue;
      if (!v.fits_slong_p()) throw std::overflow_error("to_sparse_int: entry exceeds int64");
      t.push_back({i, j, v.get_si()});
    }
  return SparseIntMatrix(m.rows(), m.cols(), std::move(t));
}

inline IntMatrix to_int_matrix(const SparseIntMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i)) r(i, e.col) = static_cast<long>(e.value);
  return r;
}

// Matrix-vector products. `V` is the vector element type, which may differ from
// the matrix entry type (e.g. BigInt counts pushed through int64 multiplicities).

template <class V, class T>
std::vector<V> vec_mat(std::span<const V> v, const SparseMatrix<T>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat: dimension mismatch");
  std::vector<V> r(m.cols(), V(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (const auto& e : m.row(i)) {
      if constexpr (std::is_same_v<V, BigInt> && std::is_integral_v<T>)
        r[e.col] += v[i] * static_cast<long>(e.value);
      else
        r[e.col] += v[i] * e.value;
    }
  }
  return r;
}

template <class V, class T>
std::vector<V> mat_vec(const SparseMatrix<T>& m, std::span<const V> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<V> r(m.rows(), V(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i)) {
      if constexpr (std::is_same_v<V, BigInt> && std::is_integral_v<T>)
        r[i] += v[e.col] * static_cast<long>(e.value);
      else
        r[i] += v[e.col] * e.value;
    }
  return r;
}

inline constexpr double kSparseDensityThreshold = 0.10;

/// Exact M·v; matrices below 10% density go through the CSR path.
template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, std::span<const T> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  const double cells = static_cast<double>(m.rows() * m.cols());
  if (cells > 0 && static_cast<double>(m.nonzeros()) < kSparseDensityThreshold * cells)
    return mat_vec(SparseMatrix<T>::from_dense(m), v);
  std::vector<T> r(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
  return mat_vec(m, std::span<const T>(v));
}

template <class T>
std::vector<T> vec_mat(std::span<const T> v, const Matrix<T>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat: dimension mismatch");
  std::vector<T> r(m.cols(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

}  // namespace fibpart
