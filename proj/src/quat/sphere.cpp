#include "octaflag/quat/sphere.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace octaflag {

void require_unit(const Quat& q, double tol) {
  double n = q.norm2();
  if (!(std::abs(n - 1.0) <= tol)) {
    std::ostringstream os;
    os << "expected a unit quaternion, got N(q) = " << n;
    throw DomainError(os.str());
  }
}

double wrap_two_pi(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

SphericalCoords to_spherical(const Quat& q) {
  require_unit(q);
  SphericalCoords c;
  double v = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  c.omega = std::atan2(v, q.w);
  if (v == 0.0) return c;
  double yz = std::hypot(q.y, q.z);
  c.phi = std::atan2(yz, q.x);
  if (yz == 0.0) return c;
  c.theta = wrap_two_pi(std::atan2(q.z, q.y));
  return c;
}

Quat from_spherical(const SphericalCoords& c) {
  double so = std::sin(c.omega);
  double sp = std::sin(c.phi);
  return {std::cos(c.omega), so * std::cos(c.phi), so * sp * std::cos(c.theta),
          so * sp * std::sin(c.theta)};
}

Quat round_geodesic(const Quat& q, double t) {
  require_unit(q);
  double v = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (v == 0.0) {
    if (q.w < 0) throw DomainError("antipodal: geodesic not unique");
    return Quat::identity();
  }
  double omega = std::atan2(v, q.w);
  double s = std::sin(t * omega) / v;
  return {std::cos(t * omega), s * q.x, s * q.y, s * q.z};
}

Quat slerp(const Quat& p, const Quat& q, double t) {
  return p * round_geodesic(p.conj() * q, t);
}

double sphere_distance(const Quat& p, const Quat& q) {
  // 2 atan2(|p - q|, |p + q|) is accurate at both ends of [0, pi].
  return 2.0 * std::atan2(norm(p - q), norm(p + q));
}

Quat project_sphere(const Quat& x) {
  double n = norm(x);
  if (n == 0.0) throw DomainError("project_sphere: zero vector");
  return (1.0 / n) * x;
}

Quat random_unit_quaternion(CounterRng& rng) {
  for (;;) {
    Quat g{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    double n = norm(g);
    if (n > 1e-12) return (1.0 / n) * g;
  }
}

}  // namespace octaflag
