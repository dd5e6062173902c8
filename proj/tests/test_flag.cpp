#include "octaflag/error.hpp"
#include "octaflag/flag/distance.hpp"
#include "octaflag/flag/flag_point.hpp"
#include "octaflag/flag/geodesic.hpp"
#include "octaflag/flag/weyl.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/rot/so3.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

using namespace octaflag;
using namespace octaflag::elements;

namespace {

constexpr double kPi = std::numbers::pi;

// Flag distance by brute force over the eight lifts q h, h in Q8.
double brute_force_distance(const Quat& p, const Quat& q) {
  double best = 1e9;
  for (const auto& h : quaternion_group().elements()) best = std::min(best, sphere_distance(p, q * to_numeric(h)));
  return best;
}

}  // namespace

TEST(Weyl, GroupLaw) {
  const auto& all = WeylElement::all();
  for (const auto& a : all) {
    EXPECT_EQ(a * a.inverse(), WeylElement::identity());
    for (const auto& b : all)
      for (const auto& c : all) EXPECT_EQ((a * b) * c, a * (b * c));
  }
  EXPECT_EQ(WeylElement::from_index(5), WeylElement::w0());
  EXPECT_THROW(WeylElement::from_index(6), DomainError);
}

TEST(Weyl, LengthsAndNames) {
  const std::array<std::size_t, 6> lengths{0, 1, 1, 2, 2, 3};
  for (const auto& w : WeylElement::all()) EXPECT_EQ(w.length(), lengths[w.index()]) << w.name();
  EXPECT_EQ(WeylElement::w0().name(), "w0");
  EXPECT_EQ((WeylElement::s_alpha() * WeylElement::s_beta()).name(), "s_a s_b");
  EXPECT_THROW(WeylElement::from_permutation({0, 0, 1}), DomainError);
}

TEST(Weyl, LiftsNormalizeTheTorus) {
  for (const auto& w : WeylElement::all()) {
    const ExactMatrix3 n = weyl_lift(w);
    for (const auto& t : torus_exact()) EXPECT_TRUE(in_torus(n.transpose() * t * n));
  }
  // Rotation by pi/4 about the third axis does not normalize T.
  ExactMatrix3 eighth = ExactMatrix3::identity();
  const QSqrt2 r = QSqrt2::inv_sqrt2();
  eighth.entries = {r, QSqrt2(0) - r, QSqrt2(0), r, r, QSqrt2(0), QSqrt2(0), QSqrt2(0), QSqrt2(1)};
  ASSERT_TRUE(is_rotation(eighth));
  EXPECT_THROW(weyl_class(eighth), DomainError);
}

TEST(FlagPoint, EqualityModuloTorus) {
  const FlagPoint f(covering_map(to_numeric(omega_0())));
  for (const auto& t : torus()) EXPECT_TRUE(flag_eq(f, FlagPoint(f.representative() * Rotation::trusted(t))));
  EXPECT_FALSE(flag_eq(f, basepoint()));
  EXPECT_THROW(flag_point(2.0 * Matrix3::Identity()), DomainError);
}

TEST(FlagPoint, PhiKnownValues) {
  EXPECT_TRUE(flag_eq(phi(tau_k()), ExactFlagPoint(s_alpha_dot())));
  EXPECT_TRUE(flag_eq(phi(Quat{0.0, 0.0, 1.0, 0.0}), basepoint()));
}

TEST(Distance, BasepointValues) {
  EXPECT_NEAR(flag_distance(basepoint(), phi(to_numeric(tau_i()).conj())), kPi / 4, 1e-12);
  EXPECT_NEAR(flag_distance_from_basepoint(to_numeric(omega_0())), kPi / 3, 1e-12);
  EXPECT_NEAR(flag_distance_from_basepoint(Quat{0.5, 0.5, 0.5, 0.5}), kPi / 3, 1e-12);
  EXPECT_THROW(flag_distance_from_basepoint(Quat{1.0, 1.0, 0.0, 0.0}), DomainError);
}

TEST(Distance, BruteForceMinimum) {
  CounterRng rng(21);
  for (int n = 0; n < 2000; ++n) {
    const Quat p = random_unit_quaternion(rng), q = random_unit_quaternion(rng);
    EXPECT_NEAR(flag_distance(phi(p), phi(q)), brute_force_distance(p, q), 1e-12);
    EXPECT_NEAR(flag_distance_quaternionic(p, q), brute_force_distance(p, q), 1e-12);
  }
}

TEST(Distance, DiameterBound) {
  // Largest distance to the basepoint is attained at (1+i+j+k)/2-type points.
  CounterRng rng(22);
  for (int n = 0; n < 5000; ++n) EXPECT_LE(flag_distance_from_basepoint(random_unit_quaternion(rng)), kPi / 3 + 1e-12);
}

TEST(Distance, TriangleInequality) {
  CounterRng rng(23);
  for (int n = 0; n < 1000; ++n) {
    const FlagPoint a = phi(random_unit_quaternion(rng)), b = phi(random_unit_quaternion(rng)),
                    c = phi(random_unit_quaternion(rng));
    EXPECT_LE(flag_distance(a, c), flag_distance(a, b) + flag_distance(b, c) + 1e-12);
    EXPECT_NEAR(flag_distance(a, b), flag_distance(b, a), 1e-14);
  }
}

TEST(Geodesic, GeneratorIsLogOfCovering) {
  CounterRng rng(24);
  for (int n = 0; n < 200; ++n) {
    Quat q = random_unit_quaternion(rng);
    if (q.w < 0) q = -q;
    EXPECT_LT(max_abs_diff(exp_skew(x_q(q)).matrix(), covering_map(q).matrix()), 1e-12);
  }
  EXPECT_THROW(x_q(Quat{0.0, 0.0, 1.0, 0.0}), DomainError);
}

TEST(Geodesic, ShortSegmentsAreMinimal) {
  CounterRng rng(25);
  for (int n = 0; n < 500; ++n) {
    Quat q = random_unit_quaternion(rng);
    if (q.w < 0) q = -q;
    const double omega = std::acos(q.w);
    if (omega > kPi / 4) continue;
    const double t = rng.uniform();
    EXPECT_NEAR(flag_distance(basepoint(), flag_geodesic(q, t)), t * omega, 1e-12);
  }
}

TEST(FubiniStudy, ComplexLine) {
  using C = std::complex<double>;
  const std::array<C, 2> a{C(1, 0), C(0, 0)}, b{C(0, 0), C(1, 0)}, c{C(1, 0), C(1, 0)};
  EXPECT_NEAR(fubini_study_distance(a, b), kPi / 2, 1e-15);
  EXPECT_NEAR(fubini_study_distance(a, c), kPi / 4, 1e-15);
  const std::array<C, 2> phase{C(0, 1), C(0, 1)};
  EXPECT_NEAR(fubini_study_distance(c, phase), 0.0, 1e-15);
  const std::array<C, 1> one{C(1, 0)};
  EXPECT_THROW(fubini_study_distance(a, one), DomainError);
  const std::array<C, 2> zero{};
  EXPECT_THROW(fubini_study_distance(a, zero), DomainError);
}

TEST(FubiniStudy, TinyAnglesResolved) {
  const std::array<double, 2> p{1.0, 0.0}, q{std::cos(1e-9), std::sin(1e-9)};
  EXPECT_NEAR(fubini_study_distance(p, q), 1e-9, 1e-20);
}

TEST(FubiniStudy, RealProjectiveLineBruteForce) {
  CounterRng rng(26);
  for (int n = 0; n < 1000; ++n) {
    const double a = rng.uniform(0, 2 * kPi), b = rng.uniform(0, 2 * kPi);
    const std::array<double, 2> p{std::cos(a), std::sin(a)}, q{std::cos(b), std::sin(b)}, mq{-q[0], -q[1]};
    const auto angle = [](const std::array<double, 2>& x, const std::array<double, 2>& y) {
      return std::abs(std::atan2(x[0] * y[1] - x[1] * y[0], x[0] * y[0] + x[1] * y[1]));
    };
    EXPECT_NEAR(fubini_study_distance(p, q), std::min(angle(p, q), angle(p, mq)), 1e-12);
  }
}
