#pragma once

#include "octaflag/quat/quaternion.hpp"
#include "octaflag/rot/rotation.hpp"
#include "octaflag/rot/skew.hpp"

namespace octaflag {

/// Rodrigues formula: with theta = ||vee(S)|| and X = S / theta,
/// exp(S) = I + sin(theta) X + (1 - cos(theta)) X^2.
Rotation exp_skew(const SkewMatrix& s);

/// Principal logarithm X = theta / (2 sin theta) (R - R^T) with
/// theta = arccos((tr R - 1) / 2); log(I) = 0.
///
/// Throws DomainError("angle-pi rotation: logarithm not unique") when
/// tr(R) <= -1 + 1e-9.
SkewMatrix log_rotation(const Rotation& r);

/// Angle in [0, pi] of a rotation matrix, via atan2 of the axial and trace parts.
double rotation_angle(const Matrix3& m);

/// B(q): the matrix of v -> q v q^{-1} on span(i, j, k) in the basis (i, j, k).
/// Throws DomainError if |N(q) - 1| > 1e-9.
Rotation covering_map(const Quat& q);
/// Exact flavor; requires N(q) = 1 exactly.
ExactMatrix3 covering_map(const ExactQuat& q);

/// One of the two preimages of R under B, chosen with w >= 0.
Quat quaternion_from_rotation(const Rotation& r);

/// d_1 B(x, y, z) = 2 [[0, z, -y], [-z, 0, x], [y, -x, 0]] = 2 hat(x, y, z).
SkewMatrix differential_b(const Vector3& u);

/// g8(X, Y) = -tr(XY) / 8.
double g8_metric(const SkewMatrix& x, const SkewMatrix& y);

/// Length of s -> p exp(sX) on [0, t]: t ||X||_F / (2 sqrt 2).
double arc_length(const SkewMatrix& x, double t);

/// g8 distance on SO3: half the rotation angle of P^T Q.
double so3_distance(const Rotation& p, const Rotation& q);

}  // namespace octaflag
