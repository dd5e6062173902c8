#pragma once

#include "octaflag/flag/flag_point.hpp"
#include "octaflag/quat/quaternion.hpp"
#include "octaflag/rot/skew.hpp"

namespace octaflag {

/// X_q = 2 omega [[0, -sp st, sp ct], [sp st, 0, -cp], [-sp ct, cp, 0]] for
/// q in spherical coordinates (omega, phi, theta), where sp = sin(phi),
/// ct = cos(theta) and so on. This is log B(q).
///
/// Requires 0 < omega < pi/2; throws DomainError("outside unique-logarithm
/// regime") otherwise.
SkewMatrix x_q(const Quat& q);

/// gamma_q(t) = exp(t X_q) T(R), the image in F(R) of the minimal geodesic
/// from 1 to q on S^3.
FlagPoint flag_geodesic(const Quat& q, double t);

}  // namespace octaflag
