#pragma once

// Arbitrary-precision integers and rationals (GMP) plus the few conversions
// the rest of the library needs.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibpart {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// "num/den" with the denominator always present.
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt pow10(unsigned k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

inline BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Parses "-12.0345" or "7/3" exactly.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational q(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  }
  bool negative = s.front() == '-';
  if (negative || s.front() == '+') s.erase(0, 1);
  auto dot = s.find('.');
  std::string digits = s;
  unsigned frac = 0;
  if (dot != std::string::npos) {
    frac = static_cast<unsigned>(s.size() - dot - 1);
    digits = s.substr(0, dot) + s.substr(dot + 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed decimal literal: " + std::string(text));
  Rational q(BigInt(digits), pow10(frac));
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

/// Natural logarithm of a positive integer without overflowing a double.
inline double log_of(const BigInt& v) {
  if (sgn(v) <= 0) throw std::domain_error("log of non-positive integer");
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace fibpart
