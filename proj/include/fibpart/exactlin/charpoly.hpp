#pragma once

// Exact characteristic polynomials by Faddeev-LeVerrier. Every division by k
// is exact over Z, so no rationals are needed.

#include <cstddef>
#include <string>
#include <vector>

#include "../bigint.hpp"
#include "../errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace fibpart {

inline constexpr std::size_t kCharPolyMaxDim = 64;

/// det(X I - m), monic of degree n.
inline IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  if (n > kCharPolyMaxDim)
    throw CapExceeded("char_poly: dimension " + std::to_string(n) + " exceeds " + std::to_string(kCharPolyMaxDim));
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;
  IntMatrix acc(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    BigInt t = (m * acc).trace();
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -t;
  }
  return IntPolynomial(std::move(c));
}

}  // namespace fibpart
