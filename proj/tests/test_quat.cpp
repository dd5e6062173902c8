#include "octaflag/error.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/qsqrt2.hpp"
#include "octaflag/quat/sphere.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

using namespace octaflag;
using namespace octaflag::elements;

namespace {

// The 48 elements written out: units, (+-1 +-i +-j +-k)/2 and (+-a +-b)/sqrt2.
std::set<ExactQuat, ExactQuatLess> listed_binary_octahedral() {
  std::set<ExactQuat, ExactQuatLess> out;
  const QSqrt2 h = QSqrt2::ratio(1, 2), r = QSqrt2::inv_sqrt2();
  for (int axis = 0; axis < 4; ++axis) {
    for (int sign : {1, -1}) {
      std::array<QSqrt2, 4> c{};
      c[axis] = sign;
      out.insert({c[0], c[1], c[2], c[3]});
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::array<QSqrt2, 4> c{};
    for (int n = 0; n < 4; ++n) c[n] = (mask >> n & 1 ? QSqrt2(-1) : QSqrt2(1)) * h;
    out.insert({c[0], c[1], c[2], c[3]});
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          std::array<QSqrt2, 4> c{};
          c[a] = QSqrt2(sa) * r;
          c[b] = QSqrt2(sb) * r;
          out.insert({c[0], c[1], c[2], c[3]});
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST(QSqrt2, FieldArithmetic) {
  const QSqrt2 r2 = QSqrt2::sqrt2();
  EXPECT_EQ(r2 * r2, QSqrt2(2));
  EXPECT_EQ(QSqrt2::inv_sqrt2() * r2, QSqrt2(1));
  const QSqrt2 x(QSqrt2::Rational(3, 4), QSqrt2::Rational(-5, 7));
  EXPECT_EQ(x / x, QSqrt2(1));
  EXPECT_EQ((x + r2) - r2, x);
  EXPECT_NEAR(x.to_double(), 0.75 - 5.0 / 7.0 * std::sqrt(2.0), 1e-15);
}

TEST(QSqrt2, OrderingFollowsRealValue) {
  EXPECT_LT(QSqrt2::ratio(7, 5), QSqrt2::sqrt2());
  EXPECT_GT(QSqrt2::ratio(3, 2), QSqrt2::sqrt2());
  EXPECT_EQ(QSqrt2::sqrt2() - QSqrt2::ratio(3, 2) < QSqrt2(0), true);
  EXPECT_EQ(QSqrt2(QSqrt2::Rational(0), QSqrt2::Rational(-1)).sign(), -1);
}

TEST(FiniteGroup, QuaternionGroupHasEightUnits) {
  const auto& q8 = quaternion_group();
  ASSERT_EQ(q8.size(), 8u);
  for (const auto& g : {one(), i(), j(), k(), -one(), -i(), -j(), -k()}) EXPECT_TRUE(q8.contains(g));
}

TEST(FiniteGroup, BinaryOctahedralMatchesListedElements) {
  const auto& o = binary_octahedral_group();
  const auto listed = listed_binary_octahedral();
  ASSERT_EQ(listed.size(), 48u);
  ASSERT_EQ(o.size(), 48u);
  for (const auto& g : o.elements()) EXPECT_TRUE(listed.contains(g)) << g;
}

TEST(FiniteGroup, TableIsAssociativeWithInverses) {
  const auto& o = binary_octahedral_group();
  for (std::size_t a = 0; a < o.size(); ++a) {
    EXPECT_EQ(o.multiply(a, o.inverse(a)), o.identity_index());
    for (std::size_t b = 0; b < o.size(); b += 5)
      for (std::size_t c = 0; c < o.size(); c += 7)
        EXPECT_EQ(o.multiply(o.multiply(a, b), c), o.multiply(a, o.multiply(b, c)));
  }
}

TEST(FiniteGroup, GeneratorBoundIsEnforced) {
  const ExactQuat gens[] = {tau_i(), tau_j()};
  EXPECT_THROW(generate_subgroup(gens, 20), DomainError);
  EXPECT_EQ(generate_subgroup(gens).size(), 48u);
}

TEST(FiniteGroup, NonUnitGeneratorRejected) {
  const ExactQuat gens[] = {ExactQuat{QSqrt2(1), QSqrt2(1), QSqrt2(0), QSqrt2(0)}};
  EXPECT_THROW(generate_subgroup(gens), DomainError);
}

TEST(CosetLabel, KernelIsQuaternionGroup) {
  const auto& o = binary_octahedral_group();
  std::size_t kernel = 0;
  for (const auto& g : o.elements()) {
    if (octahedral_coset_label(g) == WeylElement::identity()) {
      ++kernel;
      EXPECT_TRUE(quaternion_group().contains(g)) << g;
    }
  }
  EXPECT_EQ(kernel, 8u);
}

TEST(CosetLabel, GeneratorsMapToSimpleReflections) {
  EXPECT_EQ(octahedral_coset_label(tau_k()), WeylElement::s_alpha());
  EXPECT_EQ(octahedral_coset_label(tau_i()), WeylElement::s_beta());
  EXPECT_EQ(octahedral_coset_label(tau_j()), WeylElement::w0());
}

TEST(CosetLabel, RejectsElementsOutsideO) {
  const ExactQuat q{QSqrt2::ratio(3, 5), QSqrt2::ratio(4, 5), QSqrt2(0), QSqrt2(0)};
  EXPECT_THROW(octahedral_coset_label(q), DomainError);
}

TEST(Sphere, SphericalCoordinatesOfTauK) {
  const SphericalCoords c = to_spherical(to_numeric(tau_k()));
  EXPECT_NEAR(c.omega, std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(c.phi, std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(c.theta, std::numbers::pi / 2, 1e-15);
}

TEST(Sphere, DegenerateChartsAreCanonical) {
  const SphericalCoords c = to_spherical(Quat::identity());
  EXPECT_EQ(c.omega, 0.0);
  EXPECT_EQ(c.phi, 0.0);
  EXPECT_EQ(c.theta, 0.0);
  const SphericalCoords d = to_spherical(Quat{0.0, 1.0, 0.0, 0.0});
  EXPECT_EQ(d.theta, 0.0);
}

TEST(Sphere, SlerpMatchesAngleOracle) {
  CounterRng rng(5);
  for (int n = 0; n < 200; ++n) {
    const Quat p = random_unit_quaternion(rng), q = random_unit_quaternion(rng);
    const double t = rng.uniform();
    const Quat m = slerp(p, q, t);
    const double d = sphere_distance(p, q);
    EXPECT_NEAR(sphere_distance(p, m), t * d, 1e-12);
    EXPECT_NEAR(sphere_distance(m, q), (1 - t) * d, 1e-12);
  }
}

TEST(Sphere, RoundGeodesicRejectsMinusOne) {
  EXPECT_THROW(round_geodesic(-Quat::identity(), 0.5), DomainError);
}

TEST(Sphere, RequireUnit) {
  EXPECT_NO_THROW(require_unit(Quat{0.6, 0.8, 0.0, 0.0}));
  EXPECT_THROW(require_unit(Quat{1.0, 1.0, 0.0, 0.0}), DomainError);
  EXPECT_THROW(project_sphere(Quat{0.0, 0.0, 0.0, 0.0}), DomainError);
}

TEST(Sphere, RandomPointsAreUniformOnAverage) {
  CounterRng rng(11);
  double mean[4] = {};
  const int n = 20000;
  for (int s = 0; s < n; ++s) {
    const auto c = random_unit_quaternion(rng).coords();
    for (int a = 0; a < 4; ++a) mean[a] += c[a] / n;
  }
  for (double m : mean) EXPECT_NEAR(m, 0.0, 0.02);
}

TEST(Random, SubstreamsAreReproducibleAndDistinct) {
  CounterRng a(42, 3), b(42, 3), c(42, 4);
  for (int n = 0; n < 10; ++n) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    EXPECT_NE(x, c.next_u64());
  }
}
