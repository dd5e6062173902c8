#pragma once

#include "octaflag/quat/quaternion.hpp"
#include "octaflag/random.hpp"

namespace octaflag {

/// Hyperspherical coordinates of a unit quaternion:
/// q = (cos w, sin w cos p, sin w sin p cos t, sin w sin p sin t)
/// with w = omega in [0, pi], p = phi in [0, pi], t = theta in [0, 2 pi).
struct SphericalCoords {
  double omega = 0.0;
  double phi = 0.0;
  double theta = 0.0;
};

inline constexpr double kUnitTolerance = 1e-9;

/// Throws DomainError unless |N(q) - 1| <= tol.
void require_unit(const Quat& q, double tol = kUnitTolerance);

/// Degenerate charts are canonical: phi = theta = 0 when sin(omega) = 0,
/// theta = 0 when sin(phi) = 0.
SphericalCoords to_spherical(const Quat& q);
Quat from_spherical(const SphericalCoords& c);

/// Wraps an angle into [0, 2 pi).
double wrap_two_pi(double angle);

/// Minimal great-circle geodesic from 1 to q evaluated at t:
/// (cos(t omega), sin(t omega) * v/|v|). Throws for q = -1.
Quat round_geodesic(const Quat& q, double t);

/// Minimal great-circle geodesic from p to q at t, as p * round_geodesic(p^{-1} q, t).
Quat slerp(const Quat& p, const Quat& q, double t);

/// Round (great-circle) distance on S^3.
double sphere_distance(const Quat& p, const Quat& q);

/// x / |x|; throws DomainError on the zero vector.
Quat project_sphere(const Quat& x);

/// Uniform point on S^3 from four normalized standard normals.
Quat random_unit_quaternion(CounterRng& rng);

}  // namespace octaflag
