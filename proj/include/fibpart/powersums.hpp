#pragma once

/**
 * @file powersums.hpp
 * @brief S_F^(p)(N) = sum_{n<N} r_F(n)^p: direct summation, evaluation at
 *        Fibonacci cutoffs through A_p, squeeze bounds and scaling ratios.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "automata.hpp"
#include "bigint.hpp"
#include "numeration.hpp"
#include "report.hpp"
#include "spectral.hpp"

namespace fibpart {

inline const double kGoldenRatio = (1.0 + std::sqrt(5.0)) / 2.0;

/// Sum over the first N entries of an existing table.
inline BigInt power_sum_direct(int p, std::uint64_t n_limit, const PartitionTable& table) {
  if (p < 1) throw std::invalid_argument("power_sum_direct: p must be positive");
  if (n_limit > table.limit()) throw std::out_of_range("power_sum_direct: N beyond table");
  BigInt total = 0, term;
  for (std::uint64_t n = 0; n < n_limit; ++n) {
    mpz_ui_pow_ui(term.get_mpz_t(), table[n], static_cast<unsigned long>(p));
    total += term;
  }
  return total;
}

inline BigInt power_sum_direct(int p, std::uint64_t n_limit, std::uint64_t cap = kDefaultDirectCap) {
  return power_sum_direct(p, n_limit, PartitionTable(n_limit, cap));
}

/// Number of length-ell words accepted by A_p, which is S_F^(p)(f_{ell+1}).
inline BigInt power_sum_automaton(int p, std::size_t ell) { return count_accepted(accessible_product(p), ell); }

/// S_F^(p)(f_{ell+1}) for ell = 0..ell_max.
inline std::vector<BigInt> power_sums_at_cutoffs(int p, std::size_t ell_max) {
  return accepted_counts(accessible_product(p), ell_max + 1);
}

/// With f_l <= N < f_{l+1}: S(f_l) <= S(N) < S(f_{l+1}).
inline Report squeeze_check(int p, std::uint64_t n, std::uint64_t cap = kDefaultDirectCap) {
  if (n < 1) throw std::invalid_argument("squeeze_check: N must be positive");
  FibSequence fibs;
  const std::size_t ell = fibs.bracket(BigInt(static_cast<unsigned long>(n)));
  const std::uint64_t lower_cut = fibs(ell).get_ui(), upper_cut = fibs(ell + 1).get_ui();
  const PartitionTable table(upper_cut, std::max(cap, upper_cut));
  const BigInt lower = power_sum_direct(p, lower_cut, table);
  const BigInt mid = power_sum_direct(p, n, table);
  const BigInt upper = power_sum_direct(p, upper_cut, table);

  Report report("squeeze, p = " + std::to_string(p) + ", N = " + std::to_string(n));
  report.add("bracket", lower_cut <= n && n < upper_cut,
             "f_" + std::to_string(ell) + " = " + std::to_string(lower_cut) + " <= N < " + std::to_string(upper_cut));
  report.add("S(f_l) <= S(N)", lower <= mid, to_decimal(lower) + " <= " + to_decimal(mid));
  report.add("S(N) < S(f_{l+1})", mid < upper, to_decimal(mid) + " < " + to_decimal(upper));
  return report;
}

/// log S - e log N, with e = log lambda / log phi.
inline double scaled_ratio(const BigInt& sum, const BigInt& n, double exponent) {
  return std::exp(log_of(sum) - exponent * log_of(n));
}

struct PowerSumSeries {
  int p = 0;
  double lambda = 0.0;
  double exponent = 0.0;  // log lambda / log phi
  std::vector<std::size_t> ells;
  std::vector<BigInt> cutoffs;  // N = f_{ell+1}
  std::vector<BigInt> sums;
  std::vector<double> ratios;
};

/// Cutoff series for ell = 0..ell_max using the certified lambda_p.
inline PowerSumSeries scaling_series(int p, std::size_t ell_max, const LambdaRecord& rec) {
  if (p < 1 || p > 8) throw std::out_of_range("scaling_series: p must be in [1, 8]");
  PowerSumSeries s;
  s.p = p;
  s.lambda = rec.lambda_float;
  s.exponent = std::log(s.lambda) / std::log(kGoldenRatio);
  s.sums = power_sums_at_cutoffs(p, ell_max);
  FibSequence fibs;
  for (std::size_t ell = 0; ell <= ell_max; ++ell) {
    s.ells.push_back(ell);
    s.cutoffs.push_back(fibs(ell + 1));
    s.ratios.push_back(scaled_ratio(s.sums[ell], s.cutoffs[ell], s.exponent));
  }
  return s;
}

inline PowerSumSeries scaling_series(int p, std::size_t ell_max) {
  return scaling_series(p, ell_max, compute_lambda(p));
}

struct RatioBand {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double spread() const { return max / min; }
};

/// Extremes of the series ratios over ell in [ell_lo, ell_hi].
inline RatioBand ratio_band(const PowerSumSeries& s, std::size_t ell_lo, std::size_t ell_hi) {
  if (ell_hi >= s.ratios.size() || ell_lo > ell_hi) throw std::out_of_range("ratio_band: window outside series");
  RatioBand b;
  for (std::size_t ell = ell_lo; ell <= ell_hi; ++ell) {
    b.min = std::min(b.min, s.ratios[ell]);
    b.max = std::max(b.max, s.ratios[ell]);
  }
  return b;
}

/// Extremes of S(N) / N^exponent over every N in [n_lo, n_hi).
inline RatioBand ratio_band_direct(int p, std::uint64_t n_lo, std::uint64_t n_hi, double exponent,
                                   std::uint64_t cap = kDefaultDirectCap) {
  if (n_lo < 1 || n_lo >= n_hi) throw std::invalid_argument("ratio_band_direct: need 1 <= n_lo < n_hi");
  const PartitionTable table(n_hi, cap);
  BigInt total = 0, term;
  RatioBand b;
  for (std::uint64_t n = 0; n + 1 < n_hi; ++n) {
    mpz_ui_pow_ui(term.get_mpz_t(), table[n], static_cast<unsigned long>(p));
    total += term;
    const std::uint64_t big_n = n + 1;  // total == S(big_n)
    if (big_n < n_lo) continue;
    const double r = std::exp(log_of(total) - exponent * std::log(static_cast<double>(big_n)));
    b.min = std::min(b.min, r);
    b.max = std::max(b.max, r);
  }
  return b;
}

/// A_{l+1} / A_l for consecutive terms, each an estimate of the growth rate.
inline std::vector<double> successive_ratios(const std::vector<BigInt>& counts) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
    if (counts[i] == 0) throw std::domain_error("successive_ratios: zero term");
    out.push_back(to_double(make_rational(counts[i + 1], counts[i])));
  }
  return out;
}

}  // namespace fibpart
