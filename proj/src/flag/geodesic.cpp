#include "octaflag/flag/geodesic.hpp"

#include "octaflag/error.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/rot/so3.hpp"

#include <cmath>
#include <numbers>

namespace octaflag {

SkewMatrix x_q(const Quat& q) {
  const SphericalCoords c = to_spherical(q);
  if (!(c.omega > 0.0 && c.omega < std::numbers::pi / 2)) {
    throw DomainError("outside unique-logarithm regime");
  }
  const double sp = std::sin(c.phi), cp = std::cos(c.phi);
  const double st = std::sin(c.theta), ct = std::cos(c.theta);
  Matrix3 m;
  m << 0, -sp * st, sp * ct,
       sp * st, 0, -cp,
      -sp * ct, cp, 0;
  return SkewMatrix::from_matrix(2.0 * c.omega * m);
}

FlagPoint flag_geodesic(const Quat& q, double t) { return FlagPoint(exp_skew(t * x_q(q))); }

}  // namespace octaflag
