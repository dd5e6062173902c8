#include "octaflag/rot/rotation.hpp"

#include "octaflag/error.hpp"
#include "octaflag/rot/so3.hpp"

#include <ostream>

namespace octaflag {

bool is_rotation(const Matrix3& m, double tol) {
  if (!m.allFinite()) return false;
  double ortho = (m.transpose() * m - Matrix3::Identity()).cwiseAbs().maxCoeff();
  return ortho <= tol && std::abs(m.determinant() - 1.0) <= tol;
}

Rotation Rotation::from_matrix(const Matrix3& m, double tol) {
  if (!is_rotation(m, tol)) throw DomainError("matrix is not a rotation (R^T R != I or det R != 1)");
  return Rotation(m);
}

double Rotation::angle() const { return rotation_angle(m_); }

ExactMatrix3 ExactMatrix3::identity() { return diagonal(1, 1, 1); }

ExactMatrix3 ExactMatrix3::diagonal(int a, int b, int c) {
  ExactMatrix3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

ExactMatrix3 ExactMatrix3::from_ints(const std::array<int, 9>& v) {
  ExactMatrix3 m;
  for (std::size_t n = 0; n < 9; ++n) m.entries[n] = v[n];
  return m;
}

ExactMatrix3 ExactMatrix3::transpose() const {
  ExactMatrix3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QSqrt2 ExactMatrix3::determinant() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Matrix3 ExactMatrix3::to_numeric() const {
  Matrix3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = (*this)(r, c).to_double();
  return out;
}

ExactMatrix3 operator*(const ExactMatrix3& a, const ExactMatrix3& b) {
  ExactMatrix3 out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      QSqrt2 s;
      for (int n = 0; n < 3; ++n) s += a(r, n) * b(n, c);
      out(r, c) = std::move(s);
    }
  }
  return out;
}

bool is_rotation(const ExactMatrix3& m) {
  return m.transpose() * m == ExactMatrix3::identity() && m.determinant() == QSqrt2(1);
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix3& m) {
  os << "[";
  for (int r = 0; r < 3; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < 3; ++c) os << (c ? ", " : "") << m(r, c);
  }
  return os << "]";
}

}  // namespace octaflag
