#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate polynomials with arbitrary-precision integer coefficients.
 *
 * Coefficients are stored in ascending degree and kept trimmed, so the zero
 * polynomial has no coefficients and degree -1. Division-type operations work
 * over Q through pseudo-remainders, which keeps all arithmetic in Z.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../bigint.hpp"

namespace fibpart {

class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

  /// Convenience for literals written highest degree first, e.g. {1, -2, -2, 2}.
  static IntPolynomial from_descending(std::initializer_list<long> coeffs) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    std::reverse(c.begin(), c.end());
    return IntPolynomial(std::move(c));
  }

  static IntPolynomial from_descending(const std::vector<long>& coeffs) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) c.emplace_back(*it);
    return IntPolynomial(std::move(c));
  }

  static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

  /// X - root
  static IntPolynomial linear_root(const BigInt& root) { return IntPolynomial(std::vector<BigInt>{-root, BigInt(1)}); }

  static IntPolynomial monomial(std::size_t degree) {
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c.back() = 1;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  /// gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Content removed, leading coefficient positive.
  IntPolynomial primitive() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> c = coeffs_;
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(c));
  }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(c));
  }

  BigInt operator()(const BigInt& x) const {
    BigInt r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
  }

  Rational operator()(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
  }

  double evaluate(double x) const {
    double r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i].get_d();
    return r;
  }

  /// Sign of p(n/d) via the homogenized integer sum; avoids rational growth.
  int sign_at(const Rational& x) const {
    if (is_zero()) return 0;
    const BigInt& n = x.get_num();
    const BigInt& d = x.get_den();
    BigInt acc = 0, dpow = 1;
    // Horner on sum_i c_i n^i d^(deg-i)
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * n + coeffs_[i] * dpow;
      dpow *= d;
    }
    return sgn(acc);
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> c = a.coeffs_;
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const BigInt& k, const IntPolynomial& a) { return IntPolynomial::constant(k) * a; }

  /// "X^3 - 2*X^2 - 2*X + 2"
  std::string to_string(char var = 'X') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coefficients();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int steps = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k, --steps) {
    BigInt lead = r[static_cast<std::size_t>(k)];
    for (auto& v : r) v *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= lead * b.coefficients()[static_cast<std::size_t>(j)];
  }
  // Pad out the remaining multiplications so the factor is always lb^(da-db+1).
  for (; steps > 0; --steps)
    for (auto& v : r) v *= lb;
  return IntPolynomial(std::move(r));
}

/// Whether d divides f in Q[X].
inline bool poly_divides(const IntPolynomial& d, const IntPolynomial& f) {
  if (d.is_zero()) throw std::invalid_argument("poly_divides: divisor is zero");
  if (f.is_zero()) return true;
  return pseudo_remainder(f, d).is_zero();
}

/// Quotient f / d over Q, made primitive; throws unless d divides f.
inline IntPolynomial exact_quotient(const IntPolynomial& f, const IntPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_quotient: divisor is zero");
  if (f.degree() < d.degree()) {
    if (f.is_zero()) return {};
    throw std::domain_error("exact_quotient: divisor does not divide");
  }
  std::vector<Rational> r(f.coefficients().begin(), f.coefficients().end());
  std::vector<Rational> q(static_cast<std::size_t>(f.degree() - d.degree() + 1));
  const Rational lead(d.leading());
  for (int k = f.degree(); k >= d.degree(); --k) {
    Rational coef = r[static_cast<std::size_t>(k)] / lead;
    q[static_cast<std::size_t>(k - d.degree())] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) r[static_cast<std::size_t>(k - d.degree() + j)] -= coef * d.coefficients()[static_cast<std::size_t>(j)];
  }
  for (int k = 0; k < d.degree(); ++k)
    if (r[static_cast<std::size_t>(k)] != 0) throw std::domain_error("exact_quotient: divisor does not divide");
  BigInt den = 1;
  for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(q.size());
  for (const auto& c : q) out.emplace_back(c.get_num() * (den / c.get_den()));
  return IntPolynomial(std::move(out)).primitive();
}

/// Primitive gcd via the primitive polynomial remainder sequence.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive();
}

/// Product of the distinct irreducible factors, primitive.
inline IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) return {};
  IntPolynomial g = poly_gcd(f, f.derivative());
  if (g.degree() <= 0) return f.primitive();
  return exact_quotient(f, g);
}

}  // namespace fibpart
