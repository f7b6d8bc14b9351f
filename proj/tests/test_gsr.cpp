#include <gtest/gtest.h>

#include <cmath>

#include <fibpart/gsr.hpp>
#include <fibpart/serialize.hpp>

#include "oracles.hpp"

using namespace fibpart;

namespace {

const double kSqrtPhi = std::sqrt((1 + std::sqrt(5.0)) / 2);

}  // namespace

TEST(Family, Validation) {
  EXPECT_THROW(MatrixFamily({}), std::invalid_argument);
  EXPECT_THROW(MatrixFamily({IntMatrix::identity(2), IntMatrix::identity(3)}), std::invalid_argument);
  EXPECT_THROW(MatrixFamily({IntMatrix{{BigInt(-1)}}}), std::invalid_argument);
  EXPECT_EQ(berstel_family().dim(), 4u);
}

TEST(WordProduct, Basics) {
  const MatrixFamily f = berstel_family();
  EXPECT_EQ(word_product(f, BitWord("0")), f[0]);
  EXPECT_EQ(word_product(f, BitWord("11")).nonzeros(), 0u);
  EXPECT_EQ(word_product(f, BitWord("0001")), f[0] * f[0] * f[0] * f[1]);
  EXPECT_NEAR(spectral_radius_float(word_product(f, BitWord("0001"))), (3 + std::sqrt(5.0)) / 2, 1e-9);
  EXPECT_THROW(word_product(f, BitWord("")), std::invalid_argument);
}

TEST(Necklaces, MatchRotationOracle) {
  for (std::size_t k = 1; k <= 14; ++k) {
    std::vector<std::string> got;
    for (const auto& w : necklaces(k)) got.push_back(w.to_string());
    ASSERT_EQ(got, oracle::necklaces_by_rotation(k)) << k;
  }
}

TEST(Necklaces, CyclicFactor) {
  EXPECT_TRUE(has_cyclic_factor_11(BitWord("1001")));
  EXPECT_TRUE(has_cyclic_factor_11(BitWord("0110")));
  EXPECT_FALSE(has_cyclic_factor_11(BitWord("0101")));
  EXPECT_TRUE(has_cyclic_factor_11(BitWord("1")));
  EXPECT_FALSE(has_cyclic_factor_11(BitWord("0")));
}

TEST(RhoK, SmallK) {
  const MatrixFamily f = berstel_family();
  const GsrEstimate e1 = rho_k(f, 1);
  EXPECT_NEAR(e1.rho_k, 1.0, 1e-12);
  const GsrEstimate e4 = rho_k(f, 4, true);
  EXPECT_NEAR(e4.normalized, kSqrtPhi, 1e-9);
  EXPECT_EQ(e4.witness.to_string(), "0001");
  const GsrEstimate e8 = rho_k(f, 8, true);
  EXPECT_NEAR(e8.normalized, kSqrtPhi, 1e-9);
  EXPECT_THROW(rho_k(f, 21), CapExceeded);
  EXPECT_THROW(rho_k(MatrixFamily({IntMatrix::identity(2), IntMatrix::identity(2)}), 3, true), std::invalid_argument);
}

TEST(RhoK, TwoByExhaustion) {
  // every word of length 2: 00, 01, 10, 11 with no rotation reduction
  const MatrixFamily f = berstel_family();
  double best = 0;
  for (const char* w : {"00", "01", "10", "11"})
    best = std::max(best, spectral_radius_float(word_product(f, BitWord(w))));
  EXPECT_NEAR(rho_k(f, 2).rho_k, best, 1e-12);
  EXPECT_LE(std::sqrt(best), kSqrtPhi);
}

TEST(RhoK, SkippingDoesNotChangeMaximum) {
  const MatrixFamily f = berstel_family();
  for (std::size_t k = 2; k <= 12; ++k) EXPECT_NEAR(rho_k(f, k, true).rho_k, rho_k(f, k, false).rho_k, 1e-9) << k;
}

TEST(RhoK, ParallelMatchesSerial) {
  const MatrixFamily f = berstel_family();
  const GsrEstimate a = rho_k(f, 14, false, 1), b = rho_k(f, 14, false, 4);
  EXPECT_EQ(a.rho_k, b.rho_k);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(RhoK, CyclicShiftInvariance) {
  const MatrixFamily f = berstel_family();
  auto gen = oracle::rng(21);
  for (int t = 0; t < 100; ++t) {
    const std::size_t len = 1 + gen() % 12;
    const BitWord w = BitWord::from_code(gen(), len);
    const BitWord s = w.rotated(1 + gen() % len);
    ASSERT_NEAR(spectral_radius_float(word_product(f, w)), spectral_radius_float(word_product(f, s)), 1e-9)
        << w.to_string();
  }
}

TEST(RhoK, CyclicOnesAreNilpotent) {
  const MatrixFamily f = berstel_family();
  auto gen = oracle::rng(22);
  for (int t = 0; t < 60; ++t) {
    const std::size_t len = 2 + gen() % 10;
    BitWord w = BitWord::from_code(gen() | 1U | (std::uint64_t{1} << (len - 1)), len);  // starts and ends with 1
    const IntMatrix m = word_product(f, w);
    ASSERT_EQ((m * m).nonzeros(), 0u) << w.to_string();
    ASSERT_EQ(spectral_radius_float(m), 0.0);
  }
}

TEST(WordBound, UpToSixteen) {
  std::vector<GsrEstimate> est;
  const Report r = verify_word_bound(berstel_family(), 16, true, 1, &est);
  for (const auto& c : r.checks()) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  ASSERT_EQ(est.size(), 16u);
  for (std::size_t k : {4u, 8u, 12u, 16u}) EXPECT_NEAR(est[k - 1].normalized, kSqrtPhi, 1e-9);
  EXPECT_LT(est[2].normalized, kSqrtPhi - 1e-3);
}

TEST(ZMatrix, Entries) {
  EXPECT_EQ(z_matrix(2), (IntMatrix{{BigInt(1), BigInt(0)}, {BigInt(1), BigInt(1)}}));
  EXPECT_EQ(z_matrix(3), (IntMatrix{{BigInt(1), BigInt(1)}, {BigInt(1), BigInt(1)}}));
  EXPECT_EQ(z_matrix(7), (IntMatrix{{BigInt(3), BigInt(3)}, {BigInt(1), BigInt(1)}}));
  EXPECT_THROW(z_matrix(1), std::invalid_argument);
  const IntMatrix z2 = z_matrix(2);
  EXPECT_EQ((z2.transposed() * z2).trace(), 3);
}

TEST(ZBounds, Reports) {
  EXPECT_TRUE(verify_z_bounds(7).passed());
  EXPECT_TRUE(verify_z_bounds(1000).passed());
  EXPECT_THROW(verify_z_bounds(6), std::invalid_argument);
  const Report r = verify_z_reduction(40, 12);
  for (const auto& c : r.checks()) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

TEST(ZBounds, ReductionOnRandomVectors) {
  // (0, w2, 0, w4) V_{0^{h-1}1} = (0, u2, 0, u4) with (u2, u4) = (w2, w4) Z_h
  const MatrixFamily f = berstel_family();
  auto gen = oracle::rng(23);
  for (int t = 0; t < 50; ++t) {
    const long h = 2 + static_cast<long>(gen() % 20);
    const BigInt w2 = static_cast<long>(gen() % 100), w4 = static_cast<long>(gen() % 100);
    const std::vector<BigInt> w{BigInt(0), w2, BigInt(0), w4};
    const IntMatrix v = word_product(f, BitWord(std::string(static_cast<std::size_t>(h - 1), '0') + "1"));
    const auto out = vec_mat(std::span<const BigInt>(w), v);
    const IntMatrix z = z_matrix(h);
    ASSERT_EQ(out[0], 0);
    ASSERT_EQ(out[2], 0);
    ASSERT_EQ(out[1], w2 * z(0, 0) + w4 * z(1, 0));
    ASSERT_EQ(out[3], w2 * z(0, 1) + w4 * z(1, 1));
  }
}

TEST(Kronecker, SmallP) {
  const MatrixFamily f = berstel_family();
  EXPECT_NEAR(kronecker_radius(f, 1).radius, 2.0, 1e-10);
  const KroneckerRadius k2 = kronecker_radius(f, 2);
  EXPECT_NEAR(k2.radius, 2.481194304092, 1e-9);
  EXPECT_NEAR(k2.normalized, std::sqrt(k2.radius), 1e-12);
  for (int p = 1; p <= 6; ++p) EXPECT_NEAR(kronecker_radius(f, p).radius, compute_lambda(p).lambda_float, 1e-6) << p;
  EXPECT_THROW(kronecker_radius(f, 10), CapExceeded);
}

TEST(Trend, DecreasingAndAboveSqrtPhi) {
  const LambdaRootTrend t = lambda_root_trend(8);
  for (const auto& c : t.report.checks()) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  const double expected[] = {2.0, 1.575180721, 1.455921909, 1.400406077, 1.368540565, 1.347984443, 1.333692772,
                             1.323223870};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(t.rows[i].root, expected[i], 1e-8);
  EXPECT_NEAR(t.sqrt_phi.value(), kSqrtPhi, 1e-12);
  EXPECT_EQ(to_json(t)["rows"].size(), 8u);
}
