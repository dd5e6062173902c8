#pragma once

#include "octaflag/rot/rotation.hpp"

namespace octaflag {

/// Element of so3(R), stored by its vee vector.
///
/// The hat map is hat(x, y, z) = [[0, z, -y], [-z, 0, x], [y, -x, 0]], the
/// orientation in which d_1 B(x, y, z) = 2 hat(x, y, z). Note that this is the
/// transpose of the usual cross-product matrix: hat(v) w = w x v.
class SkewMatrix {
 public:
  SkewMatrix() : vee_(Vector3::Zero()) {}
  explicit SkewMatrix(const Vector3& vee) : vee_(vee) {}
  static SkewMatrix from_vee(double x, double y, double z) { return SkewMatrix(Vector3(x, y, z)); }

  /// Reads the vee vector of a skew-symmetric matrix; throws DomainError if
  /// `m + m^T` exceeds `tol` in any entry.
  static SkewMatrix from_matrix(const Matrix3& m, double tol = 1e-9);

  const Vector3& vee() const { return vee_; }
  Matrix3 matrix() const;

  /// ||hat(v)||_F = sqrt(2) ||v||_2.
  double frobenius_norm() const;

  SkewMatrix operator-() const { return SkewMatrix(-vee_); }
  friend SkewMatrix operator*(double s, const SkewMatrix& m) { return SkewMatrix(s * m.vee_); }
  friend SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) { return SkewMatrix(a.vee_ + b.vee_); }
  friend SkewMatrix operator-(const SkewMatrix& a, const SkewMatrix& b) { return SkewMatrix(a.vee_ - b.vee_); }

 private:
  Vector3 vee_;
};

/// Root vectors u_delta = f_delta - e_delta of so3, as displayed:
/// u_alpha = [[0,-1,0],[1,0,0],[0,0,0]], u_beta = [[0,0,0],[0,0,-1],[0,1,0]],
/// u_{alpha+beta} = [[0,0,-1],[0,0,0],[1,0,0]].
SkewMatrix u_alpha();
SkewMatrix u_beta();
SkewMatrix u_alpha_beta();

}  // namespace octaflag
