#pragma once

/**
 * @file spectral.hpp
 * @brief Growth constant lambda_p of the accepted-count sequence of A_p:
 *        exact annihilator, certified dominant root, checks against published
 *        values, and floating spectral-radius cross-checks.
 */

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "automata.hpp"
#include "bigint.hpp"
#include "exactlin.hpp"
#include "format.hpp"
#include "report.hpp"

namespace fibpart {

struct LambdaRecord {
  int p = 0;
  IntPolynomial annihilator;
  CertifiedRoot lambda;
  double lambda_float = 0.0;
  bool table_poly_verified = false;
  bool table_value_matched = false;
  std::size_t terms = 0;  // sequence length used for the fit
};

/// A published (p, lambda_p, minimal polynomial) row.
struct PublishedLambda {
  int p;
  std::string value;  // five decimals
  IntPolynomial poly;
};

inline const std::vector<PublishedLambda>& published_lambdas() {
  static const std::vector<PublishedLambda> rows{
      {1, "2.00000", IntPolynomial::from_descending({1, -2})},
      {2, "2.48119", IntPolynomial::from_descending({1, -2, -2, 2})},
      {3, "3.08613", IntPolynomial::from_descending({1, -2, -4, 2})},
      {4, "3.84606", IntPolynomial::from_descending({1, -2, -7, 0, -2, 2})},
      {5, "4.80052", IntPolynomial::from_descending({1, -2, -11, -8, -20, 10})},
      {6, "5.99942", IntPolynomial::from_descending({1, -2, -17, -28, -88, 26, -4, 4})},
      {7, "7.50569", IntPolynomial::from_descending({1, -2, -26, -74, -311, 34, -84, 42})},
      {8, "9.39867", IntPolynomial::from_descending({1, -2, -40, -174, -969, -2, -428, 174, -4, 4})},
  };
  return rows;
}

inline std::optional<PublishedLambda> published_lambda(int p) {
  for (const auto& row : published_lambdas())
    if (row.p == p) return row;
  return std::nullopt;
}

inline constexpr int kMaxLambdaP = 10;
inline constexpr std::size_t kAnnihilatorDegreeCap = 64;
inline constexpr std::size_t kInitialTerms = 40;
inline constexpr std::size_t kMaxTerms = 4 * kAnnihilatorDegreeCap + 8;

/**
 * Fits the minimal recurrence of A_0, A_1, ... for A_p, doubling the sequence
 * length from 40 until the fitted order agrees across two consecutive lengths
 * (capped at 264 terms), then isolates its greatest real root.
 */
inline LambdaRecord compute_lambda(int p, const Rational& precision = default_root_precision()) {
  if (p < 1 || p > kMaxLambdaP) throw std::out_of_range("compute_lambda: p must be in [1, 10]");
  const Dfa ap = accessible_product(p);
  AcceptedCounter counter(ap);
  std::vector<BigInt> seq;

  IntPolynomial previous;
  std::size_t terms = kInitialTerms;
  while (true) {
    while (seq.size() < terms) seq.push_back(counter.next());
    const std::size_t max_degree = std::min(kAnnihilatorDegreeCap, (terms - 4) / 2);
    IntPolynomial fit = fit_annihilator(seq, max_degree);
    const bool stable = !fit.is_zero() && !previous.is_zero() && fit.degree() == previous.degree();
    if (stable || terms == kMaxTerms) {
      if (fit.is_zero())
        throw InsufficientData("compute_lambda: no recurrence of order <= " + std::to_string(max_degree) +
                               " for p = " + std::to_string(p));
      previous = std::move(fit);
      break;
    }
    previous = std::move(fit);
    terms = std::min(kMaxTerms, terms * 2);
  }

  LambdaRecord rec;
  rec.p = p;
  rec.annihilator = previous;
  rec.terms = seq.size();
  rec.lambda = greatest_real_root(rec.annihilator, precision);
  rec.lambda_float = rec.lambda.value();
  if (!(rec.lambda.lo > 1)) throw std::logic_error("compute_lambda: dominant root is not > 1");
  return rec;
}

namespace detail {

/// floor(10^k q + 1/2) and floor(10^k q)
inline std::pair<BigInt, BigInt> scaled_digits(const Rational& q, unsigned k) {
  const Rational scaled = q * Rational(pow10(k));
  return {floor_of(scaled + Rational(1, 2)), floor_of(scaled)};
}

}  // namespace detail

/**
 * True when every point of [lo, hi] shows `value` at its number of decimals,
 * either rounded half-up or truncated.
 */
inline bool interval_matches_decimal(const CertifiedRoot& r, const std::string& value) {
  const auto dot = value.find('.');
  const unsigned k = dot == std::string::npos ? 0 : static_cast<unsigned>(value.size() - dot - 1);
  const BigInt target = floor_of(parse_rational(value) * Rational(pow10(k)));
  const auto [lo_round, lo_trunc] = detail::scaled_digits(r.lo, k);
  const auto [hi_round, hi_trunc] = detail::scaled_digits(r.hi, k);
  return (lo_round == target && hi_round == target) || (lo_trunc == target && hi_trunc == target);
}

/**
 * (a) `poly` divides the computed annihilator; (b) `poly` changes sign across
 * the certified interval; (c) the interval shows `value` to its printed
 * decimals.
 */
inline Report verify_published_lambda(LambdaRecord& rec, const IntPolynomial& poly, const std::string& value) {
  Report report("lambda_" + std::to_string(rec.p) + " against " + value);
  if (poly.is_zero()) throw std::invalid_argument("verify_published_lambda: zero polynomial");
  const bool divides = poly_divides(poly, rec.annihilator);
  report.add("polynomial divides annihilator", divides, poly.to_string());
  const int s_lo = poly.sign_at(rec.lambda.lo), s_hi = poly.sign_at(rec.lambda.hi);
  const bool brackets = s_lo * s_hi < 0;
  report.add("sign change across certified interval", brackets,
             "[" + to_fraction_string(rec.lambda.lo) + ", " + to_fraction_string(rec.lambda.hi) + "]");
  const bool matched = interval_matches_decimal(rec.lambda, value);
  report.add("certified interval matches printed value", matched, value);
  rec.table_poly_verified = divides && brackets;
  rec.table_value_matched = matched;
  return report;
}

inline Report verify_published_lambda(LambdaRecord& rec) {
  const auto row = published_lambda(rec.p);
  if (!row) throw std::out_of_range("no published value for p = " + std::to_string(rec.p));
  return verify_published_lambda(rec, row->poly, row->value);
}

/**
 * Floating spectral radii of U_p (all of B_p), T_p (A_p) and of the minimized
 * automaton, each compared with the certified lambda_p.
 */
inline Report verify_rho_consistency(int p, double tol, const LambdaRecord& rec) {
  if (p < 1 || p > 8) throw std::out_of_range("verify_rho_consistency: p must be in [1, 8]");
  Report report("spectral radius consistency, p = " + std::to_string(p));
  const double lambda = rec.lambda_float;
  const PowerIterationOptions opt{tol / 10, 2'000'000};

  auto check = [&](const std::string& name, const TransitionMatrix& m) {
    try {
      const auto est = power_iteration(m, opt);
      const double err = std::fabs(est.value - lambda);
      report.add(name, err <= tol, "rho = " + format_real(est.value) + ", |rho - lambda| = " + format_real(err, 3));
    } catch (const NonConvergence& e) {
      report.add(name, false, std::string("no convergence: ") + e.what());
    }
  };
  const Dfa bp = product(p);
  check("rho(U_p)", transition_matrix(bp));
  const Dfa ap = accessible(bp);
  check("rho(T_p)", transition_matrix(ap));
  check("rho(minimized)", transition_matrix(minimize(ap)));
  return report;
}

inline Report verify_rho_consistency(int p, double tol = 1e-9) { return verify_rho_consistency(p, tol, compute_lambda(p)); }

}  // namespace fibpart
