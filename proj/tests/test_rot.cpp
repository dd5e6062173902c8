#include "octaflag/error.hpp"
#include "octaflag/flag/flag_point.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/rot/so3.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace octaflag;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix3 series_exp(const Matrix3& a) {
  int s = 0;
  while (a.norm() / std::ldexp(1.0, s) > 0.5) ++s;
  const Matrix3 b = a / std::ldexp(1.0, s);
  Matrix3 sum = Matrix3::Identity(), term = Matrix3::Identity();
  for (int n = 1; n < 20; ++n) {
    term = term * b / n;
    sum += term;
  }
  for (int n = 0; n < s; ++n) sum = sum * sum;
  return sum;
}

// B(q) by conjugating the basis of pure quaternions.
Matrix3 conjugation_matrix(const Quat& q) {
  Matrix3 m;
  const Quat basis[3] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int c = 0; c < 3; ++c) {
    const Quat v = q * basis[c] * q.conj();
    m.col(c) << v.x, v.y, v.z;
  }
  return m;
}

SkewMatrix random_skew(CounterRng& rng, double max_angle) {
  const Vector3 v = Vector3(rng.normal(), rng.normal(), rng.normal()).normalized();
  return SkewMatrix(rng.uniform(0.0, max_angle) * v);
}

}  // namespace

TEST(Skew, HatConvention) {
  const SkewMatrix s = SkewMatrix::from_vee(1, 2, 3);
  Matrix3 want;
  want << 0, 3, -2, -3, 0, 1, 2, -1, 0;
  EXPECT_EQ(s.matrix(), want);
  EXPECT_NEAR(s.frobenius_norm(), std::sqrt(28.0), 1e-15);
  EXPECT_THROW(SkewMatrix::from_matrix(Matrix3::Identity()), DomainError);
}

TEST(Skew, RootMatrices) {
  EXPECT_NEAR(u_alpha().frobenius_norm(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(u_beta().frobenius_norm(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(u_alpha_beta().frobenius_norm(), std::sqrt(2.0), 1e-15);
}

TEST(Covering, AgreesWithConjugation) {
  CounterRng rng(1);
  for (int n = 0; n < 500; ++n) {
    const Quat q = random_unit_quaternion(rng);
    EXPECT_LT(max_abs_diff(covering_map(q).matrix(), conjugation_matrix(q)), 1e-14);
  }
}

TEST(Covering, ExactImagesOfTaus) {
  using namespace elements;
  EXPECT_EQ(covering_map(tau_k()), s_alpha_dot());
  EXPECT_EQ(covering_map(tau_i()), s_beta_dot());
  EXPECT_TRUE(is_rotation(covering_map(omega_0())));
}

TEST(Covering, QuaternionFromRotationIsALift) {
  CounterRng rng(2);
  for (int n = 0; n < 500; ++n) {
    const Quat q = random_unit_quaternion(rng);
    const Quat p = quaternion_from_rotation(covering_map(q));
    EXPECT_LT(std::min(max_abs_diff(p, q), max_abs_diff(p, -q)), 1e-12);
  }
}

TEST(Differential, VerbatimMatrix) {
  const SkewMatrix d = differential_b(Vector3(1, 2, 3));
  EXPECT_EQ(d.matrix(), 2.0 * SkewMatrix::from_vee(1, 2, 3).matrix());
}

// The tangent map of B along u is differential_b(-u); see the README.
TEST(Differential, FiniteDifferenceOfCovering) {
  CounterRng rng(3);
  for (int n = 0; n < 50; ++n) {
    const Vector3 u(rng.normal(), rng.normal(), rng.normal());
    const double h = 1e-6;
    const Quat plus{1.0, h * u.x(), h * u.y(), h * u.z()}, minus{1.0, -h * u.x(), -h * u.y(), -h * u.z()};
    const Matrix3 fd = (covering_map(project_sphere(plus)).matrix() - covering_map(project_sphere(minus)).matrix()) / (2 * h);
    EXPECT_LT(max_abs_diff(fd, differential_b(-u).matrix()), 1e-7);
  }
}

TEST(Differential, IsometryOntoG8) {
  CounterRng rng(4);
  for (int n = 0; n < 1000; ++n) {
    const Vector3 u(rng.normal(), rng.normal(), rng.normal()), v(rng.normal(), rng.normal(), rng.normal());
    EXPECT_NEAR(g8_metric(differential_b(u), differential_b(v)), u.dot(v), 1e-12);
  }
}

TEST(Exp, MatchesSeriesOracle) {
  CounterRng rng(5);
  for (int n = 0; n < 2000; ++n) {
    const SkewMatrix s = random_skew(rng, kPi - 0.01);
    EXPECT_LT(max_abs_diff(exp_skew(s).matrix(), series_exp(s.matrix())), 1e-10);
  }
}

TEST(Exp, SmallAnglesStayAccurate) {
  const SkewMatrix s = SkewMatrix::from_vee(1e-9, -2e-9, 0.5e-9);
  EXPECT_LT(max_abs_diff(exp_skew(s).matrix(), series_exp(s.matrix())), 1e-16);
  EXPECT_EQ(exp_skew(SkewMatrix()).matrix(), Matrix3::Identity());
}

TEST(Log, InvertsExp) {
  CounterRng rng(6);
  for (int n = 0; n < 2000; ++n) {
    const SkewMatrix s = random_skew(rng, kPi - 0.01);
    EXPECT_LT((log_rotation(exp_skew(s)).vee() - s.vee()).norm(), 1e-9);
  }
}

TEST(Log, SBetaDot) {
  Matrix3 want;
  want << 0, 0, 0, 0, 0, -1, 0, 1, 0;
  EXPECT_LT(max_abs_diff(log_rotation(Rotation::trusted(s_beta_dot().to_numeric())).matrix(), (kPi / 2) * want), 1e-12);
}

TEST(Log, AnglePiRejected) {
  EXPECT_THROW(log_rotation(Rotation::trusted(ExactMatrix3::diagonal(1, -1, -1).to_numeric())), DomainError);
  EXPECT_NO_THROW(log_rotation(exp_skew(SkewMatrix::from_vee(kPi - 1e-3, 0, 0))));
}

TEST(Rotation, FromMatrixValidates) {
  EXPECT_THROW(Rotation::from_matrix(2.0 * Matrix3::Identity()), DomainError);
  EXPECT_THROW(Rotation::from_matrix(-Matrix3::Identity()), DomainError);
  EXPECT_NO_THROW(Rotation::from_matrix(s_alpha_dot().to_numeric()));
}

// Polygonal length of s -> exp(sX) on [0, t] converges to the closed form.
TEST(Metric, ArcLengthQuadrature) {
  CounterRng rng(7);
  for (int n = 0; n < 20; ++n) {
    const SkewMatrix x = random_skew(rng, 3.0);
    const double t = rng.uniform();
    const int steps = 4000;
    double length = 0.0;
    Matrix3 prev = Matrix3::Identity();
    for (int k = 1; k <= steps; ++k) {
      const Matrix3 cur = exp_skew((t * k / steps) * x).matrix();
      length += (cur - prev).norm() / (2 * std::sqrt(2.0));
      prev = cur;
    }
    EXPECT_NEAR(length, arc_length(x, t), 1e-6);
  }
}

TEST(Metric, DistanceIsHalfAngle) {
  const Rotation r = exp_skew(SkewMatrix::from_vee(0, 0, 1.2));
  EXPECT_NEAR(so3_distance(Rotation::identity(), r), 0.6, 1e-15);
  EXPECT_NEAR(rotation_angle(s_alpha_dot().to_numeric()), kPi / 2, 1e-15);
}
