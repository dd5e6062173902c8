#include "octaflag/rot/skew.hpp"

#include "octaflag/error.hpp"

#include <cmath>
#include <numbers>

namespace octaflag {

SkewMatrix SkewMatrix::from_matrix(const Matrix3& m, double tol) {
  if ((m + m.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw DomainError("SkewMatrix: matrix is not skew-symmetric");
  }
  Matrix3 a = 0.5 * (m - m.transpose());
  return SkewMatrix(Vector3(a(1, 2), a(2, 0), a(0, 1)));
}

Matrix3 SkewMatrix::matrix() const {
  const double x = vee_.x(), y = vee_.y(), z = vee_.z();
  Matrix3 m;
  m << 0, z, -y,
      -z, 0, x,
       y, -x, 0;
  return m;
}

double SkewMatrix::frobenius_norm() const { return std::numbers::sqrt2 * vee_.norm(); }

SkewMatrix u_alpha() { return SkewMatrix::from_vee(0, 0, -1); }
SkewMatrix u_beta() { return SkewMatrix::from_vee(-1, 0, 0); }
SkewMatrix u_alpha_beta() { return SkewMatrix::from_vee(0, 1, 0); }

}  // namespace octaflag
