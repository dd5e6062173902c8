#include "octaflag/quat/quaternion.hpp"

#include <ostream>

namespace octaflag {

std::ostream& operator<<(std::ostream& os, const Quat& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

std::ostream& operator<<(std::ostream& os, const ExactQuat& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

namespace elements {
namespace {

ExactQuat halves(int w, int x, int y, int z) {
  return {QSqrt2::ratio(w, 2), QSqrt2::ratio(x, 2), QSqrt2::ratio(y, 2), QSqrt2::ratio(z, 2)};
}

ExactQuat tau(int axis) {
  ExactQuat q{QSqrt2::inv_sqrt2(), 0, 0, 0};
  if (axis == 1) q.x = QSqrt2::inv_sqrt2();
  if (axis == 2) q.y = QSqrt2::inv_sqrt2();
  if (axis == 3) q.z = QSqrt2::inv_sqrt2();
  return q;
}

}  // namespace

ExactQuat one() { return {1, 0, 0, 0}; }
ExactQuat i() { return {0, 1, 0, 0}; }
ExactQuat j() { return {0, 0, 1, 0}; }
ExactQuat k() { return {0, 0, 0, 1}; }
ExactQuat tau_i() { return tau(1); }
ExactQuat tau_j() { return tau(2); }
ExactQuat tau_k() { return tau(3); }
ExactQuat omega_0() { return halves(1, 1, 1, 1); }
ExactQuat omega_i() { return halves(1, -1, 1, 1); }
ExactQuat omega_j() { return halves(1, 1, -1, 1); }
ExactQuat omega_k() { return halves(1, 1, 1, -1); }

}  // namespace elements
}  // namespace octaflag
