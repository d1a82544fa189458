#include "pentagramma/cone_spectrum.hpp"
#include "pentagramma/oracles.hpp"
#include "pentagramma/pentagram.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace pentagramma;

TEST(Napier, RulesHoldForRightTriangle) {
  const auto t = right_triangle_parts(0.7, 1.1);
  EXPECT_LT(max_abs(verify_napier(t)), 1e-14);
}

TEST(Napier, AgreesWithLawOfCosines) {
  for (double a : {0.2, 0.8, 1.4}) {
    for (double b : {0.3, 1.0, 1.5}) {
      const auto fast = right_triangle_parts(a, b);
      const auto slow = oracle::law_of_cosines_parts(a, b);
      for (int i = 0; i < 5; ++i) EXPECT_NEAR(fast[i], slow[i], 1e-9) << a << "," << b << " part " << i;
    }
  }
}

TEST(Napier, RotationIsOrderFiveAndReflectionIsItsSquare) {
  const auto t = right_triangle_parts(0.4, 0.9);
  auto r = t;
  for (int i = 0; i < 5; ++i) r = napier_rotate(r);
  EXPECT_EQ(r, t);
  EXPECT_EQ(gauss_reflect(t), napier_rotate(napier_rotate(t)));
}

TEST(Napier, RejectsDegenerateLegs) {
  EXPECT_THROW(right_triangle_parts(0.0, 0.5), DomainError);
  EXPECT_THROW(right_triangle_parts(0.5, std::numbers::pi / 2), DomainError);
}

TEST(AlphaCycle, CompletionFromTwoValues) {
  const auto c = complete_from_two(9.0, 2.0);
  const std::array<double, 5> expected{9.0, 2.0 / 3.0, 2.0, 5.0, 1.0 / 3.0};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(c[i], expected[i], 1e-15);
  EXPECT_NEAR(c.product(), 20.0, 1e-13);
  EXPECT_LT(c.max_relative_residual(), 1e-15);
}

TEST(AlphaCycle, UnitPairGivesTwelve) {
  const auto c = complete_from_two(1.0, 1.0);
  EXPECT_NEAR(c.product(), 12.0, 1e-14);
  const auto inv = pentagram_invariants(c);
  EXPECT_NEAR(inv.sum_form, 12.0, 1e-14);
  EXPECT_NEAR(inv.sqrt_form, 12.0, 1e-14);
}

TEST(AlphaCycle, RegularPentagramIsGolden) {
  const auto c = complete_from_two(kGolden, kGolden);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(c[i], kGolden, 1e-14);
  EXPECT_NEAR(c.product(), critical_omega(), 1e-12);
  EXPECT_NEAR(std::pow(kGolden, 5), critical_omega(), 1e-12);
  for (double side : sides_from_alphas(c)) EXPECT_NEAR(std::cos(side), (std::sqrt(5.0) - 1.0) / 2.0, 1e-15);
}

TEST(AlphaCycle, RandomPropertySample) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logd(-4.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const auto c = complete_from_two(std::exp(logd(rng)), std::exp(logd(rng)));
    const auto inv = pentagram_invariants(c);
    ASSERT_LT(c.max_relative_residual(), 1e-12);
    ASSERT_NEAR(inv.sum_form / inv.product, 1.0, 1e-12);
    ASSERT_NEAR(inv.sqrt_form / inv.product, 1.0, 1e-12);
    ASSERT_GE(inv.product, critical_omega() * (1 - 1e-12));
    const auto back = alphas_from_sides(sides_from_alphas(c));
    for (int j = 0; j < 5; ++j) ASSERT_NEAR(back[j] / c[j], 1.0, 1e-12);
  }
}

TEST(AlphaCycle, ShiftIsAlsoAPentagram) {
  const auto c = complete_from_two(0.3, 4.0).shifted(2);
  EXPECT_LT(c.max_relative_residual(), 1e-14);
}

TEST(AlphaCycle, RejectsOutOfRange) {
  EXPECT_THROW(complete_from_two(-1.0, 2.0), DomainError);
  EXPECT_THROW(complete_from_two(0.0, 2.0), DomainError);
  EXPECT_THROW(AlphaCycle({1e-9, 1, 1, 1, 1}), DomainError);
}

TEST(Pentagon, TriangleAtEachVertexObeysNapier) {
  const auto c = complete_from_two(1.7, 0.6);
  for (int i = 0; i < 5; ++i) {
    EXPECT_LT(max_abs(verify_napier(pentagon_triangle_parts(c, i))), 1e-13) << i;
  }
  // the triangle at vertex i + 1 is the reflection of the one at vertex i
  for (int i = 0; i < 5; ++i) {
    const auto r = gauss_reflect(pentagon_triangle_parts(c, i));
    const auto next = pentagon_triangle_parts(c, i + 1);
    for (int j = 0; j < 5; ++j) EXPECT_NEAR(r[j], next[j], 1e-15) << i << " part " << j;
  }
}

TEST(Pentagon, SphereVerticesReproduceSides) {
  const auto c = complete_from_two(9.0, 2.0);
  const auto sphere = build_sphere_vertices(c);
  EXPECT_LT(max_abs(sphere.orthogonality_residuals()), 1e-14);
  const auto measured = sphere.measured_alphas();
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(measured[i] / c[i], 1.0, 1e-12);
  for (const auto& v : sphere.vertices) EXPECT_NEAR(norm(v), 1.0, 1e-15);
}
