#include "pentagramma/elliptic.hpp"
#include "pentagramma/uniformization.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pentagramma;

TEST(Frame, FifthVectorWrapsToFirst) {
  const auto f = frame_vectors(0.7, 0.3);
  const Vec3 r5 = frame_vector_at(0.7, 0.3, 5);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r5[i], f[0][i], 1e-13);
}

TEST(Frame, TranslationByFifthPeriodShiftsIndex) {
  const double k = 0.8;
  const double step = 4.0 * elliptic::complete_K(k) / 5.0;
  const auto f = frame_vectors(k, 0.41);
  const auto g = frame_vectors(k, 0.41 + step);
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(g[j][i], f[j + 1][i], 1e-12);
  const auto a = alpha_sequence(f);
  const auto b = alpha_sequence(g);
  for (int j = 0; j < 5; ++j) EXPECT_NEAR(b[j], a[j + 1], 1e-11);
}

TEST(Frame, AlphasFormPentagramEverywhere) {
  for (double k : {0.0, 0.2, 0.5, 0.9}) {
    for (double u : {0.0, 0.37, 1.9, 4.4}) {
      const auto a = alpha_sequence(frame_vectors(k, u));
      EXPECT_LT(a.max_relative_residual(), 1e-11) << k << "," << u;
    }
  }
}

TEST(Frame, OmegaIndependentOfU) {
  for (double k : {0.3, 0.6, 0.9}) {
    const double ref = omega_of_k(k, 0.0);
    for (double u : {0.2, 1.3, 3.1}) EXPECT_NEAR(omega_of_k(k, u) / ref, 1.0, 1e-12);
  }
}

TEST(Frame, OmegaIncreasesWithK) {
  double prev = omega_of_k(0.0);
  EXPECT_NEAR(prev, critical_omega(), 1e-11);
  for (int i = 1; i <= 99; ++i) {
    const double cur = omega_of_k(i / 100.0);
    EXPECT_GT(cur, prev) << i;
    prev = cur;
  }
}

TEST(Frame, CircularCaseFirstVector) {
  const auto f = frame_vectors(0.0, 0.0);
  const double c = std::cos(std::numbers::pi / 5.0);
  EXPECT_NEAR(f[0][0], 1.0 / std::sqrt(c), 1e-14);
  EXPECT_NEAR(f[0][1], 0.0, 1e-15);
  EXPECT_NEAR(f[0][2], 1.0, 0.0);
  for (double u : {0.0, 0.8, 2.5}) {
    const auto g = frame_vectors(0.0, u);
    for (int j = 0; j < 5; ++j) EXPECT_NEAR(dot(g[j], g[j]), std::sqrt(5.0), 1e-13);
  }
}

TEST(Frame, InverseModulusRoundTrip) {
  for (double k : {0.05, 0.4, 0.75, 0.95}) EXPECT_NEAR(k_of_omega(omega_of_k(k)), k, 1e-9);
  EXPECT_EQ(k_of_omega(critical_omega()), 0.0);
  EXPECT_THROW(k_of_omega(10.0), SubcriticalError);
}

TEST(Frame, RejectsBadModulus) { EXPECT_THROW(frame_vectors(1.2, 0.0), DomainError); }
