#pragma once

/**
 * @file roots.hpp
 * @brief Certified isolation of the greatest real root of an integer polynomial.
 *
 * The certificate is purely rational: a squarefree primitive polynomial g and
 * an interval [lo, hi] with g(lo) g(hi) < 0 and exactly one root of g inside,
 * counted by a Sturm sequence. No floating point enters the certificate.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "../bigint.hpp"
#include "../errors.hpp"
#include "polynomial.hpp"

namespace fibpart {

struct CertifiedRoot {
  IntPolynomial poly;  // squarefree, primitive
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double value() const { return to_double(midpoint()); }
};

inline Rational default_root_precision() { return Rational(BigInt(1), pow10(12)); }

/// Sturm chain p0 = g, p1 = g', p_{i+1} = -rem(p_{i-1}, p_i), each scaled by a positive constant.
inline std::vector<IntPolynomial> sturm_chain(const IntPolynomial& g) {
  std::vector<IntPolynomial> chain;
  if (g.is_zero()) return chain;
  chain.push_back(g);
  IntPolynomial d = g.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(da-db+1) * rem; undo a negative multiplier's sign flip.
    const int power = a.degree() - b.degree() + 1;
    const bool flipped = b.leading() < 0 && (power % 2 == 1);
    BigInt scale = r.content();
    if (!flipped) scale = -scale;  // we want -rem up to a positive factor
    std::vector<BigInt> c = r.coefficients();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), scale.get_mpz_t());
    chain.emplace_back(std::move(c));
  }
  return chain;
}

inline int sign_variations(const std::vector<IntPolynomial>& chain, const Rational& x) {
  int variations = 0, last = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Sign variations at +infinity / -infinity.
inline int sign_variations_at_infinity(const std::vector<IntPolynomial>& chain, bool positive) {
  int variations = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(p.leading());
    if (!positive && (p.degree() % 2 == 1)) s = -s;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Number of distinct real roots in (lo, hi].
inline int count_roots_between(const std::vector<IntPolynomial>& chain, const Rational& lo, const Rational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

inline int count_real_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  auto chain = sturm_chain(squarefree_part(f));
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

/// Strict upper bound on the modulus of every root: 1 + max |a_i / a_n|.
inline Rational cauchy_bound(const IntPolynomial& f) {
  BigInt top = 0;
  for (int i = 0; i < f.degree(); ++i) {
    BigInt a = abs(f.coefficients()[static_cast<std::size_t>(i)]);
    if (a > top) top = a;
  }
  return Rational(1) + make_rational(top, abs(f.leading()));
}

namespace detail {

/// A point strictly inside (lo, hi) that is not a root of g.
inline Rational split_point(const IntPolynomial& g, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  if (g.sign_at(mid) != 0) return mid;
  // A squarefree g has finitely many roots; nudging off-centre terminates fast.
  Rational step = (hi - lo) / 6;
  for (int k = 0;; ++k) {
    Rational candidate = mid + step;
    if (g.sign_at(candidate) != 0) return candidate;
    step /= 2;
    if (k > 256) throw std::logic_error("split_point: could not avoid roots");
  }
}

}  // namespace detail

/// Narrows an isolating interval of a certified root to width <= precision.
inline CertifiedRoot refine(CertifiedRoot root, const Rational& precision) {
  const int s_lo = root.poly.sign_at(root.lo);
  while (root.width() > precision) {
    Rational m = detail::split_point(root.poly, root.lo, root.hi);
    if (root.poly.sign_at(m) == s_lo)
      root.lo = m;
    else
      root.hi = m;
  }
  return root;
}

/**
 * Largest real root of f, isolated to width <= precision by bisection from the
 * Cauchy bound with Sturm counts. Throws NoRealRoot when f has no real root.
 */
inline CertifiedRoot greatest_real_root(const IntPolynomial& f, const Rational& precision = default_root_precision()) {
  if (f.is_zero()) throw std::invalid_argument("greatest_real_root: zero polynomial");
  if (precision <= 0) throw std::invalid_argument("greatest_real_root: precision must be positive");
  IntPolynomial g = squarefree_part(f);
  if (g.degree() < 1) throw NoRealRoot("constant polynomial has no roots");
  auto chain = sturm_chain(g);
  Rational bound = cauchy_bound(g);
  Rational lo = -bound, hi = bound;
  if (count_roots_between(chain, lo, hi) == 0) throw NoRealRoot("no real root: " + f.to_string());
  // Invariant: g(lo), g(hi) != 0, the greatest root lies in (lo, hi), none above hi.
  while (count_roots_between(chain, lo, hi) > 1) {
    Rational m = detail::split_point(g, lo, hi);
    if (count_roots_between(chain, m, hi) >= 1)
      lo = m;
    else
      hi = m;
  }
  return refine(CertifiedRoot{std::move(g), lo, hi}, precision);
}

/// Re-derives the certificate: strict endpoint sign change and a single Sturm root.
inline bool is_certified(const CertifiedRoot& r) {
  if (r.poly.degree() < 1 || !(r.lo < r.hi)) return false;
  if (r.poly.sign_at(r.lo) * r.poly.sign_at(r.hi) >= 0) return false;
  auto chain = sturm_chain(r.poly);
  if (count_roots_between(chain, r.lo, r.hi) != 1) return false;
  return count_roots_between(chain, r.hi, cauchy_bound(r.poly)) == 0;
}

}  // namespace fibpart
