#pragma once

#include "octaflag/quat/qsqrt2.hpp"

#include <Eigen/Dense>

#include <array>
#include <iosfwd>

namespace octaflag {

using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;

inline constexpr double kRotationTolerance = 1e-9;

/// True when M^T M = I and det M = 1, each within `tol` (max-abs / absolute).
bool is_rotation(const Matrix3& m, double tol = kRotationTolerance);

/// Element of SO3(R).
class Rotation {
 public:
  Rotation() : m_(Matrix3::Identity()) {}

  /// Checked construction; throws DomainError if `m` is not a rotation within `tol`.
  static Rotation from_matrix(const Matrix3& m, double tol = kRotationTolerance);
  /// For matrices that are rotations by construction (products, exponentials).
  static Rotation trusted(const Matrix3& m) { return Rotation(m); }
  static Rotation identity() { return {}; }

  const Matrix3& matrix() const { return m_; }
  double operator()(int r, int c) const { return m_(r, c); }

  Rotation transpose() const { return Rotation(m_.transpose()); }
  Rotation inverse() const { return transpose(); }

  /// Rotation angle in [0, pi].
  double angle() const;

  friend Rotation operator*(const Rotation& a, const Rotation& b) { return Rotation(a.m_ * b.m_); }

 private:
  explicit Rotation(const Matrix3& m) : m_(m) {}
  Matrix3 m_;
};

/// Largest absolute entry difference.
inline double max_abs_diff(const Matrix3& a, const Matrix3& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// 3x3 matrix over Q(sqrt 2), row-major.
struct ExactMatrix3 {
  std::array<QSqrt2, 9> entries{};

  static ExactMatrix3 identity();
  static ExactMatrix3 diagonal(int a, int b, int c);
  /// Integer entries, row-major.
  static ExactMatrix3 from_ints(const std::array<int, 9>& v);

  const QSqrt2& operator()(int r, int c) const { return entries[3 * r + c]; }
  QSqrt2& operator()(int r, int c) { return entries[3 * r + c]; }

  ExactMatrix3 transpose() const;
  QSqrt2 determinant() const;
  Matrix3 to_numeric() const;

  friend ExactMatrix3 operator*(const ExactMatrix3& a, const ExactMatrix3& b);
  friend bool operator==(const ExactMatrix3&, const ExactMatrix3&) = default;
};

/// Exact test of M^T M = I and det M = 1.
bool is_rotation(const ExactMatrix3& m);

std::ostream& operator<<(std::ostream& os, const ExactMatrix3& m);

}  // namespace octaflag
