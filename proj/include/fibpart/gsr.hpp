#pragma once

/**
 * @file gsr.hpp
 * @brief Generalized spectral radius experiments for the pair {V0, V1}:
 *        rho_k by necklace enumeration, the 2x2 Z_h bounds, and the
 *        Kronecker-power radius rho(V0^{(x)p} + V1^{(x)p})^{1/p}.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "berstel_table.hpp"
#include "bigint.hpp"
#include "exactlin.hpp"
#include "format.hpp"
#include "numeration.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "spectral.hpp"

namespace fibpart {

/// Nonempty list of square nonnegative integer matrices of one dimension.
class MatrixFamily {
 public:
  explicit MatrixFamily(std::vector<IntMatrix> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("MatrixFamily: empty");
    for (const auto& m : members_) {
      if (!m.is_square() || m.rows() != members_.front().rows())
        throw std::invalid_argument("MatrixFamily: members must be square of equal dimension");
      if (!m.is_nonnegative()) throw std::invalid_argument("MatrixFamily: negative entry");
    }
  }

  std::size_t size() const { return members_.size(); }
  std::size_t dim() const { return members_.front().rows(); }
  const IntMatrix& operator[](std::size_t i) const { return members_.at(i); }
  const std::vector<IntMatrix>& members() const { return members_; }

 private:
  std::vector<IntMatrix> members_;
};

inline MatrixFamily berstel_family() { return MatrixFamily({to_int_matrix(kV0), to_int_matrix(kV1)}); }

/// M_{x_1} M_{x_2} ... M_{x_k}
inline IntMatrix word_product(const MatrixFamily& family, const BitWord& x) {
  if (x.empty()) throw std::invalid_argument("word_product: empty word");
  if (family.size() < 2) throw std::invalid_argument("word_product: binary words need two matrices");
  IntMatrix r = family[x[0]];
  for (std::size_t i = 1; i < x.size(); ++i) r = r * family[x[i]];
  return r;
}

/// Binary necklaces of length k (lexicographically least rotations), in
/// lexicographic order. Fredricksen-Kessler-Maiorana.
inline std::vector<BitWord> necklaces(std::size_t k) {
  if (k == 0) throw std::invalid_argument("necklaces: k must be positive");
  std::vector<BitWord> out;
  std::vector<std::uint8_t> a(k + 1, 0);
  auto gen = [&](auto& self, std::size_t t, std::size_t period) -> void {
    if (t > k) {
      if (k % period == 0) out.emplace_back(std::vector<std::uint8_t>(a.begin() + 1, a.end()));
      return;
    }
    a[t] = a[t - period];
    self(self, t + 1, period);
    if (a[t - period] == 0) {
      a[t] = 1;
      self(self, t + 1, t);
    }
  };
  gen(gen, 1, 1);
  return out;
}

/// Whether "11" occurs when x is read cyclically.
inline bool has_cyclic_factor_11(const BitWord& x) {
  if (x.empty()) return false;
  return x.has_factor_11() || (x[0] == 1 && x[x.size() - 1] == 1);
}

struct GsrEstimate {
  std::size_t k = 0;
  double rho_k = 0.0;
  BitWord witness;
  double normalized = 0.0;  // rho_k^{1/k}
  std::size_t words_examined = 0;
};

inline constexpr std::size_t kMaxWordLength = 20;

/**
 * max rho(M_x) over binary words x of length k, one word per rotation class.
 * With `skip_nilpotent`, words containing 11 cyclically are skipped; this is
 * valid when M_1^2 = 0 since such a product has a nilpotent rotation.
 */
inline GsrEstimate rho_k(const MatrixFamily& family, std::size_t k, bool skip_nilpotent = false,
                         std::size_t workers = 1) {
  if (k == 0 || k > kMaxWordLength) throw CapExceeded("rho_k: k must be in [1, 20]");
  if (skip_nilpotent) {
    const IntMatrix sq = family[1] * family[1];
    if (sq.nonzeros() != 0) throw std::invalid_argument("rho_k: skipping 11 requires M_1^2 = 0");
  }
  std::vector<BitWord> words;
  for (auto& w : necklaces(k))
    if (!skip_nilpotent || !has_cyclic_factor_11(w)) words.push_back(std::move(w));

  std::vector<double> rho(words.size(), 0.0);
  parallel_for_index(words.size(), workers, [&](std::size_t i) {
    rho[i] = spectral_radius_certified(word_product(family, words[i])).value();
  });

  GsrEstimate est;
  est.k = k;
  est.words_examined = words.size();
  for (std::size_t i = 0; i < words.size(); ++i)
    if (i == 0 || rho[i] > est.rho_k) {
      est.rho_k = rho[i];
      est.witness = words[i];
    }
  est.normalized = std::pow(est.rho_k, 1.0 / static_cast<double>(k));
  return est;
}

/// sqrt(phi) as the greatest real root of X^4 - X^2 - 1.
inline CertifiedRoot certified_sqrt_phi(const Rational& precision = default_root_precision()) {
  return greatest_real_root(IntPolynomial::from_descending({1, 0, -1, 0, -1}), precision);
}

/// [[floor(h/2), floor((h-1)/2)], [1, 1]]
inline IntMatrix z_matrix(long h) {
  if (h < 2) throw std::invalid_argument("z_matrix: h must be >= 2");
  return IntMatrix{{BigInt(h / 2), BigInt((h - 1) / 2)}, {BigInt(1), BigInt(1)}};
}

/**
 * (a) ||Z_h||^{1/h} <= sqrt(phi) + 1e-12 for 2 <= h <= h_max;
 * (b) 2 trace(Z_h^T Z_h) <= h^2 + 4 for 7 <= h <= h_max, in integers;
 * (c) ((h^2 + 4) / 2)^{1/(2h)} <= sqrt(phi) for 7 <= h <= h_max.
 */
inline Report verify_z_bounds(long h_max) {
  if (h_max < 7) throw std::invalid_argument("verify_z_bounds: h_max must be >= 7");
  const double sqrt_phi = certified_sqrt_phi().value();
  Report report("Z_h bounds, h <= " + std::to_string(h_max));

  long worst_h = 2;
  double worst = -INFINITY;
  bool norm_ok = true;
  for (long h = 2; h <= h_max; ++h) {
    const double v = std::pow(spectral_norm_2x2(z_matrix(h)), 1.0 / static_cast<double>(h));
    if (v > worst) worst = v, worst_h = h;
    norm_ok = norm_ok && v <= sqrt_phi + 1e-12;
  }
  report.add("norm root bound", norm_ok, "max " + format_real(worst) + " at h = " + std::to_string(worst_h));

  bool trace_ok = true;
  long trace_fail = 0;
  for (long h = 7; h <= h_max; ++h) {
    const IntMatrix z = z_matrix(h);
    const BigInt tr = (z.transposed() * z).trace();
    if (2 * tr > BigInt(h) * h + 4) {
      trace_ok = false;
      if (!trace_fail) trace_fail = h;
    }
  }
  report.add("trace bound", trace_ok, trace_ok ? std::string{} : "first failure at h = " + std::to_string(trace_fail));

  bool tail_ok = true;
  for (long h = 7; h <= h_max; ++h) {
    const double hd = static_cast<double>(h);
    tail_ok = tail_ok && std::pow((hd * hd + 4) / 2, 1.0 / (2 * hd)) <= sqrt_phi;
  }
  report.add("tail bound", tail_ok);
  return report;
}

/**
 * Rows b and d of V_0^{h-1} V_1 are [0, Z_h(0,0), 0, Z_h(0,1)] and
 * [0, Z_h(1,0), 0, Z_h(1,1)], so on vectors supported on {b, d} the 4x4
 * product acts as Z_h. Also compares rho of every word 0^{h_1-1}1 ... 0^{h_s-1}1
 * of length <= k_max (parts >= 2) with rho(Z_{h_1} ... Z_{h_s}).
 */
inline Report verify_z_reduction(long h_max, std::size_t k_max) {
  const MatrixFamily family = berstel_family();
  Report report("Z_h reduction");
  bool rows_ok = true;
  for (long h = 2; h <= h_max; ++h) {
    const BitWord x(std::string(static_cast<std::size_t>(h - 1), '0') + "1");
    const IntMatrix v = word_product(family, x);
    const IntMatrix z = z_matrix(h);
    const std::size_t b = 1, d = 3;
    for (std::size_t r = 0; r < 2; ++r) {
      const std::size_t row = r == 0 ? b : d;
      rows_ok = rows_ok && v(row, 0) == 0 && v(row, 2) == 0 && v(row, b) == z(r, 0) && v(row, d) == z(r, 1);
    }
  }
  report.add("rows b, d of V_{0^{h-1}1} carry Z_h", rows_ok, "h <= " + std::to_string(h_max));

  bool rho_ok = true;
  std::size_t compared = 0;
  double worst = 0.0;
  std::vector<long> parts;
  auto walk = [&](auto& self, std::size_t remaining) -> void {
    if (!parts.empty()) {
      std::string word;
      IntMatrix zp = IntMatrix::identity(2);
      for (long h : parts) {
        word += std::string(static_cast<std::size_t>(h - 1), '0') + "1";
        zp = zp * z_matrix(h);
      }
      const double a = spectral_radius_certified(word_product(family, BitWord(word))).value();
      const double c = spectral_radius_certified(zp).value();
      worst = std::max(worst, std::fabs(a - c) / std::max(1.0, a));
      rho_ok = rho_ok && std::fabs(a - c) <= 1e-9 * std::max(1.0, a);
      ++compared;
    }
    for (long h = 2; static_cast<std::size_t>(h) <= remaining; ++h) {
      parts.push_back(h);
      self(self, remaining - static_cast<std::size_t>(h));
      parts.pop_back();
    }
  };
  walk(walk, k_max);
  report.add("rho(V_x) = rho(Z product)", rho_ok,
             std::to_string(compared) + " compositions, max rel. diff " + format_real(worst, 3));
  return report;
}

/**
 * rho_k^{1/k} <= sqrt(phi) + 1e-9 for k <= k_max, with equality within 1e-9
 * whenever 4 divides k.
 */
inline Report verify_word_bound(const MatrixFamily& family, std::size_t k_max, bool skip_nilpotent = true,
                                std::size_t workers = 1, std::vector<GsrEstimate>* estimates = nullptr) {
  if (k_max > kMaxWordLength) throw CapExceeded("verify_word_bound: k_max must be <= 20");
  const double sqrt_phi = certified_sqrt_phi().value();
  Report report("word bound, k <= " + std::to_string(k_max));
  for (std::size_t k = 1; k <= k_max; ++k) {
    const GsrEstimate est = rho_k(family, k, skip_nilpotent, workers);
    if (estimates) estimates->push_back(est);
    const std::string detail =
        "rho_k^{1/k} = " + format_real(est.normalized) + ", witness " + est.witness.to_string();
    report.add("k = " + std::to_string(k) + " upper", est.normalized <= sqrt_phi + 1e-9, detail);
    if (k % 4 == 0)
      report.add("k = " + std::to_string(k) + " attained", std::fabs(est.normalized - sqrt_phi) <= 1e-9, detail);
  }
  return report;
}

struct KroneckerRadius {
  int p = 0;
  double radius = 0.0;      // rho(sum of p-th Kronecker powers)
  double normalized = 0.0;  // radius^{1/p}
  double residual = 0.0;
  std::size_t iterations = 0;
};

inline constexpr std::size_t kKroneckerMaxDim = std::size_t{1} << 18;

inline KroneckerRadius kronecker_radius(const MatrixFamily& family, int p, double tol = 1e-12) {
  if (p < 1) throw std::invalid_argument("kronecker_radius: p must be positive");
  double dim = std::pow(static_cast<double>(family.dim()), p);
  if (dim > static_cast<double>(kKroneckerMaxDim)) throw CapExceeded("kronecker_radius: dimension too large");
  SparseIntMatrix sum;
  for (std::size_t i = 0; i < family.size(); ++i) {
    SparseIntMatrix term = kron_power(to_sparse_int(family[i]), static_cast<unsigned>(p));
    sum = i == 0 ? term : sum + term;
  }
  const auto est = power_iteration(sum, {tol, 2'000'000});
  return {p, est.value, std::pow(est.value, 1.0 / p), est.residual, est.iterations};
}

struct TrendRow {
  int p = 0;
  LambdaRecord lambda;
  double root = 0.0;  // lambda_p^{1/p}
  KroneckerRadius kron;
};

struct LambdaRootTrend {
  CertifiedRoot sqrt_phi;
  std::vector<TrendRow> rows;
  Report report{"lambda_p^{1/p} trend"};
};

namespace detail {

inline Rational rational_pow(const Rational& q, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace detail

/**
 * lambda_p^{1/p} for p = 1..p_max with Kronecker cross-checks. Monotonicity
 * and the lower bound sqrt(phi) are decided on the certified intervals:
 * lambda_p^{1/p} > lambda_{p+1}^{1/(p+1)} iff lambda_p^{p+1} > lambda_{p+1}^p.
 */
inline LambdaRootTrend lambda_root_trend(int p_max, double kron_tol = 1e-6, std::size_t workers = 1) {
  if (p_max < 1 || p_max > 9) throw std::out_of_range("lambda_root_trend: p_max must be in [1, 9]");
  LambdaRootTrend trend;
  trend.sqrt_phi = certified_sqrt_phi();
  trend.rows.resize(static_cast<std::size_t>(p_max));
  const MatrixFamily family = berstel_family();
  parallel_for_index(trend.rows.size(), workers, [&](std::size_t i) {
    TrendRow& row = trend.rows[i];
    row.p = static_cast<int>(i) + 1;
    row.lambda = compute_lambda(row.p);
    row.root = std::pow(row.lambda.lambda_float, 1.0 / row.p);
    row.kron = kronecker_radius(family, row.p, 1e-13);
  });

  for (const auto& row : trend.rows) {
    const double err = std::fabs(row.kron.radius - row.lambda.lambda_float);
    trend.report.add("p = " + std::to_string(row.p) + " Kronecker radius", err <= kron_tol,
                     "radius " + format_real(row.kron.radius) + ", |radius - lambda| = " + format_real(err, 3));
    const bool above = row.lambda.lambda.lo >
                       detail::rational_pow(trend.sqrt_phi.hi, static_cast<unsigned>(row.p));
    trend.report.add("p = " + std::to_string(row.p) + " above sqrt(phi)", above, format_real(row.root));
  }
  for (std::size_t i = 0; i + 1 < trend.rows.size(); ++i) {
    const auto& a = trend.rows[i];
    const auto& b = trend.rows[i + 1];
    const bool decreasing = detail::rational_pow(a.lambda.lambda.lo, static_cast<unsigned>(b.p)) >
                            detail::rational_pow(b.lambda.lambda.hi, static_cast<unsigned>(a.p));
    trend.report.add("p = " + std::to_string(a.p) + " -> " + std::to_string(b.p) + " decreasing", decreasing);
  }
  return trend;
}

}  // namespace fibpart
