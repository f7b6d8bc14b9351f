#include <gtest/gtest.h>

#include <cmath>

#include <fibpart/serialize.hpp>
#include <fibpart/spectral.hpp>

#include "oracles.hpp"

using namespace fibpart;

namespace {

// Greatest real root of the published polynomial by plain floating bisection,
// independent of the certified pipeline.
double bisect_root(const IntPolynomial& f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    if ((f.evaluate(lo) < 0) == (f.evaluate(mid) < 0))
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

TEST(Lambda, PowersOfTwoAtPOne) {
  const LambdaRecord r = compute_lambda(1);
  EXPECT_TRUE(r.lambda.lo <= 2 && 2 <= r.lambda.hi);
  EXPECT_TRUE(poly_divides(IntPolynomial::from_descending({1, -2}), r.annihilator));
  EXPECT_GT(r.lambda_float, 1.0);
}

TEST(Lambda, PublishedRowsVerify) {
  for (int p = 1; p <= 8; ++p) {
    LambdaRecord r = compute_lambda(p);
    const Report rep = verify_published_lambda(r);
    for (const auto& c : rep.checks()) EXPECT_TRUE(c.passed) << p << " " << c.name << " " << c.detail;
    EXPECT_TRUE(r.table_poly_verified);
    EXPECT_TRUE(r.table_value_matched);
    EXPECT_LE(r.lambda.width(), default_root_precision());
    EXPECT_TRUE(r.lambda.lo <= Rational(r.lambda_float) && Rational(r.lambda_float) <= r.lambda.hi);
  }
}

TEST(Lambda, AgreesWithFloatingBisection) {
  for (const auto& row : published_lambdas()) {
    const double expect = bisect_root(row.poly, 1.5, 20.0);
    EXPECT_NEAR(compute_lambda(row.p).lambda_float, expect, 1e-10) << row.p;
  }
}

TEST(Lambda, AnnihilatorIsPublishedPolynomialTimesUnitRoots) {
  const IntPolynomial unit = IntPolynomial::from_descending({1, 0, -1});
  for (const auto& row : published_lambdas()) {
    const LambdaRecord r = compute_lambda(row.p);
    EXPECT_EQ(r.annihilator, unit * row.poly) << row.p << " " << r.annihilator.to_string();
  }
}

TEST(Lambda, StrictlyIncreasingAndAboveOne) {
  double prev = 1.0;
  for (int p = 1; p <= 9; ++p) {
    const double v = compute_lambda(p).lambda_float;
    EXPECT_GT(v, prev) << p;
    prev = v;
  }
  EXPECT_THROW(compute_lambda(0), std::out_of_range);
  EXPECT_THROW(compute_lambda(11), std::out_of_range);
}

TEST(Lambda, WrongPolynomialFailsDivision) {
  LambdaRecord r = compute_lambda(2);
  const Report rep = verify_published_lambda(r, IntPolynomial::from_descending({1, -2}), "2.48119");
  EXPECT_FALSE(rep.checks()[0].passed);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(r.table_poly_verified);
}

TEST(Lambda, WrongValueFailsDigits) {
  LambdaRecord r = compute_lambda(2);
  const Report rep = verify_published_lambda(r, IntPolynomial::from_descending({1, -2, -2, 2}), "2.48120");
  EXPECT_TRUE(rep.checks()[0].passed);
  EXPECT_FALSE(rep.checks()[2].passed);
}

TEST(Lambda, RoundingOrTruncation) {
  // 3.846059... rounds to 3.84606 but truncates to 3.84605
  const CertifiedRoot r = compute_lambda(4).lambda;
  EXPECT_TRUE(interval_matches_decimal(r, "3.84606"));
  EXPECT_TRUE(interval_matches_decimal(r, "3.84605"));
  EXPECT_FALSE(interval_matches_decimal(r, "3.84607"));
}

TEST(RhoConsistency, UpToEight) {
  for (int p = 1; p <= 8; ++p) {
    const Report rep = verify_rho_consistency(p, 1e-9);
    EXPECT_EQ(rep.checks().size(), 3u);
    for (const auto& c : rep.checks()) EXPECT_TRUE(c.passed) << p << " " << c.name << " " << c.detail;
  }
}

TEST(RhoConsistency, UpAndTpAgree) {
  for (int p = 1; p <= 6; ++p) {
    const double u = power_iteration(transition_matrix(product(p)), {1e-13, 2'000'000}).value;
    const double t = power_iteration(transition_matrix(accessible_product(p)), {1e-13, 2'000'000}).value;
    EXPECT_NEAR(u, t, 1e-9) << p;
  }
}

TEST(Serialize, LambdaRecordJson) {
  LambdaRecord r = compute_lambda(2);
  verify_published_lambda(r);
  const auto j = to_json(r);
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["annihilator"][0], "-2");  // ascending
  EXPECT_TRUE(j["lambda"]["lo"].get<std::string>().find('/') != std::string::npos);
  EXPECT_TRUE(j["table_poly_verified"].get<bool>());
}
