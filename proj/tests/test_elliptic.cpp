#include "pentagramma/elliptic.hpp"
#include "pentagramma/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace pentagramma;
using elliptic::EllipticContext;

// Reference values computed to 30 digits with an arbitrary-precision library
// and frozen here.
TEST(Elliptic, CompleteIntegralMatchesFrozenValue) {
  EXPECT_NEAR(elliptic::complete_K(0.8), 1.99530277766472940, 1e-14);
  EXPECT_NEAR(elliptic::complete_K(0.0), std::numbers::pi / 2, 1e-15);
}

TEST(Elliptic, IncompleteIntegralMatchesFrozenValue) {
  EXPECT_NEAR(elliptic::incomplete_F(std::numbers::pi / 5, 0.6), 0.64292288149095835, 1e-14);
}

TEST(Elliptic, TripleMatchesFrozenValue) {
  const auto t = elliptic::jacobi_triple(0.7, 0.5);
  EXPECT_NEAR(t.sn, 0.63429327633511237, 1e-13);
  EXPECT_NEAR(t.cn, 0.77309251684133431, 1e-13);
  EXPECT_NEAR(t.dn, 0.94837651273058065, 1e-13);
}

TEST(Elliptic, AgreesWithQuadratureOracle) {
  for (double k : {0.0, 0.3, 0.7, 0.95, 0.999}) {
    const EllipticContext ctx(k);
    EXPECT_NEAR(ctx.K(), oracle::quadrature_K(k), 1e-12) << "k=" << k;
    for (double phi : {0.1, 0.9, 1.5}) {
      EXPECT_NEAR(ctx.F(phi), oracle::quadrature_F(phi, k), 1e-12) << "k=" << k << " phi=" << phi;
    }
    const double u = 0.6 * ctx.K();
    EXPECT_NEAR(ctx.am(u), oracle::quadrature_am(u, k), 1e-12) << "k=" << k;
  }
}

TEST(Elliptic, AmplitudeAtQuarterPeriods) {
  const EllipticContext ctx(0.6);
  EXPECT_NEAR(ctx.am(ctx.K()), std::numbers::pi / 2, 1e-13);
  EXPECT_NEAR(ctx.am(3 * ctx.K()), 3 * std::numbers::pi / 2, 1e-13);
  EXPECT_NEAR(ctx.am(-2 * ctx.K()), -std::numbers::pi, 1e-13);
}

TEST(Elliptic, FInvertsAmplitudeAcrossPeriods) {
  const EllipticContext ctx(0.85);
  for (double u : {-7.3, -0.4, 0.0, 1.2, 5.9, 13.0}) EXPECT_NEAR(ctx.F(ctx.am(u)), u, 1e-12) << u;
}

TEST(Elliptic, TripleIdentitiesOnRandomSample) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> kd(0.0, 0.99);
  std::uniform_real_distribution<double> ud(-20.0, 20.0);
  for (int i = 0; i < 500; ++i) {
    const double k = kd(rng);
    const double u = ud(rng);
    const auto t = elliptic::jacobi_triple(u, k);
    EXPECT_NEAR(t.sn * t.sn + t.cn * t.cn, 1.0, 1e-13);
    EXPECT_NEAR(t.dn * t.dn + k * k * t.sn * t.sn, 1.0, 1e-13);
  }
}

TEST(Elliptic, AdditionTheoremMatchesDirectEvaluation) {
  const EllipticContext ctx(0.7);
  for (double u : {0.2, 1.1, 2.9}) {
    for (double v : {0.05, 0.8, 1.7}) {
      const auto s = ctx.sum(u, v);
      const auto d = ctx.triple(u + v);
      EXPECT_NEAR(s.sn, d.sn, 1e-12);
      EXPECT_NEAR(s.cn, d.cn, 1e-12);
      EXPECT_NEAR(s.dn, d.dn, 1e-12);
    }
  }
}

TEST(Elliptic, HalfAngleTangent) {
  const EllipticContext ctx(0.5);
  const double x = 0.4;
  const double y = 1.1;
  const double value = ctx.half_angle_tan(x, y);
  EXPECT_NEAR(value, std::tan(0.5 * (ctx.am(x) + ctx.am(y))), 1e-13);
  EXPECT_NEAR(value, ctx.triple(0.5 * (x - y)).dn * std::tan(ctx.am(0.5 * (x + y))), 1e-12);
  EXPECT_THROW(ctx.half_angle_tan(ctx.K(), ctx.K()), NearPoleError);
}

TEST(Elliptic, RejectsModulusOutsideUnitInterval) {
  EXPECT_THROW(EllipticContext(1.0), DomainError);
  EXPECT_THROW(EllipticContext(-0.1), DomainError);
  EXPECT_THROW(EllipticContext(std::nan("")), DomainError);
  EXPECT_NO_THROW(EllipticContext(0.999999));
}
