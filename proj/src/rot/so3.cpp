#include "octaflag/rot/so3.hpp"

#include "octaflag/error.hpp"
#include "octaflag/quat/sphere.hpp"

#include <cmath>
#include <numbers>

namespace octaflag {

Rotation exp_skew(const SkewMatrix& s) {
  const double theta = s.vee().norm();
  if (theta == 0.0) return Rotation::identity();
  // exp(S) = I + (sin t / t) S + ((1 - cos t) / t^2) S^2, series-safe near 0.
  double a, b;
  if (theta < 1e-4) {
    const double t2 = theta * theta;
    a = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / (theta * theta);
  }
  const Matrix3 m = s.matrix();
  return Rotation::trusted(Matrix3::Identity() + a * m + b * (m * m));
}

double rotation_angle(const Matrix3& m) {
  const Matrix3 a = m - m.transpose();
  const double axial = Vector3(a(1, 2), a(2, 0), a(0, 1)).norm();  // 2 sin(theta)
  return std::atan2(axial, m.trace() - 1.0);
}

SkewMatrix log_rotation(const Rotation& r) {
  const Matrix3& m = r.matrix();
  if (m.trace() <= -1.0 + 1e-9) throw DomainError("angle-pi rotation: logarithm not unique");
  const Matrix3 a = m - m.transpose();
  const Vector3 axial(a(1, 2), a(2, 0), a(0, 1));
  const double theta = std::atan2(axial.norm(), m.trace() - 1.0);
  if (theta == 0.0) return SkewMatrix();
  // theta / (2 sin theta), with its Taylor expansion near 0.
  const double factor =
      theta < 1e-4 ? 0.5 + theta * theta / 12.0 : theta / (2.0 * std::sin(theta));
  return SkewMatrix(factor * axial);
}

namespace {

template <typename T>
void fill_covering(const Quaternion<T>& q, auto&& set) {
  const T& w = q.w;
  const T& x = q.x;
  const T& y = q.y;
  const T& z = q.z;
  const T one(1), two(2);
  set(0, 0, one - two * (y * y + z * z));
  set(0, 1, two * (x * y - w * z));
  set(0, 2, two * (x * z + w * y));
  set(1, 0, two * (x * y + w * z));
  set(1, 1, one - two * (x * x + z * z));
  set(1, 2, two * (y * z - w * x));
  set(2, 0, two * (x * z - w * y));
  set(2, 1, two * (y * z + w * x));
  set(2, 2, one - two * (x * x + y * y));
}

}  // namespace

Rotation covering_map(const Quat& q) {
  require_unit(q);
  Matrix3 m;
  fill_covering(q, [&](int r, int c, double v) { m(r, c) = v; });
  return Rotation::trusted(m);
}

ExactMatrix3 covering_map(const ExactQuat& q) {
  if (q.norm2() != QSqrt2(1)) throw DomainError("covering_map: N(q) != 1");
  ExactMatrix3 m;
  fill_covering(q, [&](int r, int c, QSqrt2 v) { m(r, c) = std::move(v); });
  return m;
}

Quat quaternion_from_rotation(const Rotation& r) {
  const Matrix3& m = r.matrix();
  const double tr = m.trace();
  Quat q;
  if (tr >= m(0, 0) && tr >= m(1, 1) && tr >= m(2, 2)) {
    q.w = 0.5 * std::sqrt(std::max(0.0, 1.0 + tr));
    const double f = 0.25 / q.w;
    q.x = (m(2, 1) - m(1, 2)) * f;
    q.y = (m(0, 2) - m(2, 0)) * f;
    q.z = (m(1, 0) - m(0, 1)) * f;
  } else if (m(0, 0) >= m(1, 1) && m(0, 0) >= m(2, 2)) {
    q.x = 0.5 * std::sqrt(std::max(0.0, 1.0 + m(0, 0) - m(1, 1) - m(2, 2)));
    const double f = 0.25 / q.x;
    q.w = (m(2, 1) - m(1, 2)) * f;
    q.y = (m(0, 1) + m(1, 0)) * f;
    q.z = (m(0, 2) + m(2, 0)) * f;
  } else if (m(1, 1) >= m(2, 2)) {
    q.y = 0.5 * std::sqrt(std::max(0.0, 1.0 - m(0, 0) + m(1, 1) - m(2, 2)));
    const double f = 0.25 / q.y;
    q.w = (m(0, 2) - m(2, 0)) * f;
    q.x = (m(0, 1) + m(1, 0)) * f;
    q.z = (m(1, 2) + m(2, 1)) * f;
  } else {
    q.z = 0.5 * std::sqrt(std::max(0.0, 1.0 - m(0, 0) - m(1, 1) + m(2, 2)));
    const double f = 0.25 / q.z;
    q.w = (m(1, 0) - m(0, 1)) * f;
    q.x = (m(0, 2) + m(2, 0)) * f;
    q.y = (m(1, 2) + m(2, 1)) * f;
  }
  q = project_sphere(q);
  return q.w < 0 ? -q : q;
}

SkewMatrix differential_b(const Vector3& u) { return SkewMatrix(2.0 * u); }

double g8_metric(const SkewMatrix& x, const SkewMatrix& y) {
  return -(x.matrix() * y.matrix()).trace() / 8.0;
}

double arc_length(const SkewMatrix& x, double t) {
  return std::abs(t) * x.frobenius_norm() / (2.0 * std::numbers::sqrt2);
}

double so3_distance(const Rotation& p, const Rotation& q) {
  return 0.5 * rotation_angle(p.matrix().transpose() * q.matrix());
}

}  // namespace octaflag
