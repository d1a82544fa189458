#include "pentagramma/poncelet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace pentagramma;

namespace {

// Independent oracle: walks tangent lines in the plane. Outer circle centred at
// the origin, inner circle centred at (-a, 0). Returns the total turning angle
// of the vertex about the origin after n chords, divided by 2 pi.
double rotation_number(double R, double r, double a, int n) {
  double x = R;
  double y = 0.0;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    // tangent from (x, y) to the inner circle, counter-clockwise side
    const double dx = x + a;
    const double dy = y;
    const double d = std::hypot(dx, dy);
    const double base = std::atan2(-dy, -dx);
    const double spread = std::asin(r / d);
    const double dir = base - spread;
    const double ux = std::cos(dir);
    const double uy = std::sin(dir);
    // second intersection with the outer circle
    const double t = -2.0 * (x * ux + y * uy);
    const double nx = x + t * ux;
    const double ny = y + t * uy;
    double turn = std::atan2(ny, nx) - std::atan2(y, x);
    while (turn <= 0.0) turn += 2.0 * std::numbers::pi;
    total += turn;
    x = nx;
    y = ny;
  }
  return total / (2.0 * std::numbers::pi);
}

} // namespace

TEST(Poncelet, ValidatesGeometry) {
  EXPECT_THROW(validate_config({1.0, 0.5, 0.6}), GeometryError);
  EXPECT_THROW(validate_config({1.0, 0.6, 0.5}), GeometryError);
  EXPECT_THROW(validate_config({-1.0, 0.5, 0.1}), GeometryError);
  const auto c = validate_config({2.0, 1.0, 0.2});
  EXPECT_DOUBLE_EQ(c.R, 1.0);
  EXPECT_DOUBLE_EQ(c.r, 0.5);
  EXPECT_DOUBLE_EQ(c.a, 0.1);
}

TEST(Poncelet, ConcentricStepIsConstant) {
  const TwoCircleConfig c{1.0, 0.5, 0.0};
  const auto traj = trajectory(c, 0.2, 6);
  for (std::size_t i = 1; i < traj.phis.size(); ++i) {
    EXPECT_NEAR(traj.phis[i] - traj.phis[i - 1], std::acos(0.5), 1e-14);
  }
  EXPECT_EQ(modulus_of_config(c).k, 0.0);
}

TEST(Poncelet, FirstStepFromZeroIsAlpha) {
  const TwoCircleConfig c{1.0, 0.45, 0.2};
  EXPECT_NEAR(chord_step(c, 0.0), modulus_of_config(c).alpha, 1e-14);
}

TEST(Poncelet, ModulusIdentities) {
  const auto m = modulus_of_config({1.0, 0.45, 0.2});
  EXPECT_NEAR(m.dn_residual, 0.0, 1e-15);
  EXPECT_NEAR(m.k2_residual, 0.0, 1e-15);
}

TEST(Poncelet, ChordFormsAgree) {
  const TwoCircleConfig c{1.0, 0.45, 0.2};
  const auto traj = trajectory(c, 0.3, 12);
  for (std::size_t i = 0; i + 1 < traj.phis.size(); ++i) {
    EXPECT_NEAR(chord_relation_residual(c, traj.phis[i], traj.phis[i + 1]), 0.0, 1e-14);
    EXPECT_NEAR(chord_geometric_residual(c, traj.phis[i], traj.phis[i + 1]), 0.0, 1e-14);
  }
  EXPECT_LT(shadowing_residual(traj), 1e-12);
}

TEST(Poncelet, EllipticClosureMatchesTangentWalk) {
  for (double a : {0.0, 0.1, 0.2, 0.3}) {
    const TwoCircleConfig c{1.0, 0.45, a};
    const auto traj = trajectory(c, 0.0, 40);
    const double turns = (traj.phis.back() - traj.phis.front()) / std::numbers::pi;
    EXPECT_NEAR(turns / 40.0, rotation_number(1.0, 0.45, a, 40) / 40.0, 1e-12) << a;
  }
}

TEST(Poncelet, EulerTriangle) {
  // d^2 = R^2 - 2 R r for a triangle inscribed/circumscribed pair
  const auto c = search_closing_config(3, 1, 1.0, 0.45);
  EXPECT_NEAR(c.a, std::sqrt(0.1), 1e-12);
  for (double phi0 : {0.0, 0.7, 2.1}) EXPECT_NEAR(closure_gap(c, phi0, 3, 1), 0.0, 1e-10);
}

TEST(Poncelet, PentagramClosesAndIsAPorism) {
  const auto c = search_closing_config(5, 2, 1.0, 0.3);
  EXPECT_NEAR(closure_residual(c, 5, 2), 0.0, 1e-12);
  EXPECT_NEAR(rotation_number(1.0, 0.3, c.a, 5), 2.0, 1e-10);
  for (double phi0 : {0.0, 0.4, 1.3, 2.2, 3.0}) EXPECT_NEAR(closure_gap(c, phi0, 5, 2), 0.0, 1e-9);
}

TEST(Poncelet, QuadrilateralCloses) {
  const auto c = search_closing_config(4, 1, 1.0, 0.6);
  EXPECT_NEAR(c.a, 0.3274, 1e-4);
  EXPECT_NEAR(closure_gap(c, 0.9, 4, 1), 0.0, 1e-9);
}

TEST(Poncelet, PentagramWithLargeInnerCircleHasNoSolution) {
  // rotation number stays below 2/5 for every admissible centre distance
  for (double a : {0.0, 0.1, 0.2, 0.3, 0.39}) EXPECT_LT(rotation_number(1.0, 0.4, a, 200) / 200.0, 0.4);
  EXPECT_THROW(search_closing_config(5, 2, 1.0, 0.4), NoSolutionError);
}
