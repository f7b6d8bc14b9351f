#pragma once

/**
 * @file serialize.hpp
 * @brief JSON, CSV and plain-text renderings. Exact integers are written as
 *        decimal strings and rationals as "num/den".
 */

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "bigint.hpp"
#include "exactlin.hpp"
#include "format.hpp"
#include "gsr.hpp"
#include "powersums.hpp"
#include "report.hpp"
#include "spectral.hpp"

namespace fibpart {

using json = nlohmann::ordered_json;

/// Ascending coefficients as decimal strings.
inline json to_json(const IntPolynomial& f) {
  json a = json::array();
  for (const auto& c : f.coefficients()) a.push_back(to_decimal(c));
  return a;
}

inline json to_json(const CertifiedRoot& r) {
  return {{"poly", to_json(r.poly)}, {"lo", to_fraction_string(r.lo)}, {"hi", to_fraction_string(r.hi)}};
}

inline json to_json(const LambdaRecord& r) {
  return {{"p", r.p},
          {"annihilator", to_json(r.annihilator)},
          {"lambda", to_json(r.lambda)},
          {"lambda_float", r.lambda_float},
          {"table_poly_verified", r.table_poly_verified},
          {"table_value_matched", r.table_value_matched},
          {"terms", r.terms}};
}

inline json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks())
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"vacuous", c.vacuous}});
  return {{"title", r.title()}, {"passed", r.passed()}, {"checks", checks}};
}

inline json to_json(const PowerSumSeries& s) {
  json points = json::array();
  for (std::size_t i = 0; i < s.ells.size(); ++i)
    points.push_back({{"ell", s.ells[i]},
                      {"N", to_decimal(s.cutoffs[i])},
                      {"S", to_decimal(s.sums[i])},
                      {"ratio", s.ratios[i]}});
  return {{"p", s.p}, {"lambda", s.lambda}, {"exponent", s.exponent}, {"points", points}};
}

inline json to_json(const GsrEstimate& e) {
  return {{"k", e.k},
          {"rho_k", e.rho_k},
          {"normalized", e.normalized},
          {"witness", e.witness.to_string()},
          {"words_examined", e.words_examined}};
}

inline json to_json(const KroneckerRadius& k) {
  return {{"p", k.p},
          {"radius", k.radius},
          {"normalized", k.normalized},
          {"residual", k.residual},
          {"iterations", k.iterations}};
}

inline json to_json(const LambdaRootTrend& t) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"p", r.p},
                    {"lambda", to_json(r.lambda.lambda)},
                    {"lambda_float", r.lambda.lambda_float},
                    {"root", r.root},
                    {"kronecker", to_json(r.kron)}});
  return {{"sqrt_phi", to_json(t.sqrt_phi)}, {"rows", rows}, {"report", to_json(t.report)}};
}

/// Columns ell, N, S, ratio.
inline std::string to_csv(const PowerSumSeries& s) {
  std::ostringstream os;
  os << "ell,N,S,ratio\n";
  for (std::size_t i = 0; i < s.ells.size(); ++i)
    os << s.ells[i] << ',' << to_decimal(s.cutoffs[i]) << ',' << to_decimal(s.sums[i]) << ','
       << format_real(s.ratios[i]) << '\n';
  return os.str();
}

/// One "PASS name" / "FAIL name" line per check, detail in parentheses.
inline std::string to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks()) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (c.vacuous) os << " [vacuous]";
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace fibpart
