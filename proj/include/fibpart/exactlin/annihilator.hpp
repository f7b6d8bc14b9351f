#pragma once

/**
 * @file annihilator.hpp
 * @brief Minimal linear recurrences of integer sequences.
 *
 * Berlekamp-Massey over Q finds the shortest recurrence
 *   s_n + c_1 s_{n-1} + ... + c_L s_{n-L} = 0   (n >= L)
 * and returns its characteristic polynomial X^L + c_1 X^{L-1} + ... + c_L,
 * cleared to a primitive integer polynomial with positive leading coefficient.
 * The result is unique whenever 2L <= length; requiring 2L + 4 <= length
 * leaves four terms of slack that the fit must also explain.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "../bigint.hpp"
#include "../errors.hpp"
#include "polynomial.hpp"

namespace fibpart {

/// True when sum_i a_i s_{n+i} = 0 for every window that fits in seq.
inline bool annihilates(const IntPolynomial& poly, std::span<const BigInt> seq) {
  if (poly.is_zero()) return false;
  const auto d = static_cast<std::size_t>(poly.degree());
  const auto& a = poly.coefficients();
  for (std::size_t n = 0; n + d < seq.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= d; ++i) acc += a[i] * seq[n + i];
    if (acc != 0) return false;
  }
  return true;
}

/**
 * Characteristic polynomial of the minimal recurrence of `seq`, searching
 * orders up to `max_degree`. Returns the zero polynomial if none fits.
 * Throws InsufficientData when seq.size() < 2 * max_degree + 4.
 */
inline IntPolynomial fit_annihilator(std::span<const BigInt> seq, std::size_t max_degree) {
  if (seq.size() < 2 * max_degree + 4)
    throw InsufficientData("fit_annihilator: " + std::to_string(seq.size()) + " terms cannot certify order " +
                           std::to_string(max_degree));
  std::vector<Rational> conn{Rational(1)};  // C(x), connection polynomial
  std::vector<Rational> prev{Rational(1)};  // B(x) at the last length change
  std::size_t order = 0, shift = 1;
  Rational prev_discrepancy = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational d = seq[n];
    for (std::size_t i = 1; i <= order && i < conn.size(); ++i) d += conn[i] * seq[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    std::vector<Rational> saved = conn;
    Rational coef = d / prev_discrepancy;
    if (conn.size() < prev.size() + shift) conn.resize(prev.size() + shift, Rational(0));
    for (std::size_t i = 0; i < prev.size(); ++i) conn[i + shift] -= coef * prev[i];
    if (2 * order <= n) {
      order = n + 1 - order;
      prev = std::move(saved);
      prev_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  if (order > max_degree) return {};
  conn.resize(order + 1, Rational(0));
  // X^L C(1/X): coefficient of X^(L-i) is c_i.
  BigInt den = 1;
  for (const auto& c : conn) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ascending(order + 1);
  for (std::size_t i = 0; i <= order; ++i) ascending[order - i] = conn[i].get_num() * (den / conn[i].get_den());
  IntPolynomial poly = IntPolynomial(std::move(ascending)).primitive();
  if (!annihilates(poly, seq)) throw std::logic_error("fit_annihilator: recurrence failed re-substitution");
  return poly;
}

/// Searches every order the data can certify: (len - 4) / 2.
inline IntPolynomial fit_annihilator(std::span<const BigInt> seq) {
  if (seq.size() < 4) throw InsufficientData("fit_annihilator: need at least 4 terms");
  return fit_annihilator(seq, (seq.size() - 4) / 2);
}

}  // namespace fibpart
