#pragma once

#include "octaflag/error.hpp"
#include "octaflag/quat/qsqrt2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iosfwd>

namespace octaflag {

/// Quaternion w + x i + y j + z k over a scalar field.
///
/// Instantiated for double (numeric flavor) and QSqrt2 (exact flavor).
/// Multiplication follows ijk = i^2 = j^2 = k^2 = -1.
template <typename T>
struct Quaternion {
  T w{0}, x{0}, y{0}, z{0};

  constexpr Quaternion() = default;
  constexpr Quaternion(T w_, T x_, T y_, T z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion identity() { return {T(1), T(0), T(0), T(0)}; }

  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }

  friend Quaternion operator+(Quaternion l, const Quaternion& r) { return l += r; }
  friend Quaternion operator-(Quaternion l, const Quaternion& r) { return l -= r; }

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }
  friend Quaternion operator*(const T& s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  Quaternion conj() const { return {w, -x, -y, -z}; }

  /// N(q) = w^2 + x^2 + y^2 + z^2.
  T norm2() const { return w * w + x * x + y * y + z * z; }

  /// q^{-1} = conj(q) / N(q); throws DomainError when N(q) = 0.
  Quaternion inverse() const {
    T n = norm2();
    if (n == T(0)) throw DomainError("quaternion: inverse of zero quaternion");
    T r = T(1) / n;
    return r * conj();
  }

  std::array<T, 4> coords() const { return {w, x, y, z}; }
};

using Quat = Quaternion<double>;
using ExactQuat = Quaternion<QSqrt2>;

inline Quat to_numeric(const ExactQuat& q) {
  return {q.w.to_double(), q.x.to_double(), q.y.to_double(), q.z.to_double()};
}

inline double norm(const Quat& q) { return std::sqrt(q.norm2()); }

/// Largest componentwise absolute difference.
inline double max_abs_diff(const Quat& p, const Quat& q) {
  return std::max({std::abs(p.w - q.w), std::abs(p.x - q.x), std::abs(p.y - q.y),
                   std::abs(p.z - q.z)});
}

/// Structural order for exact quaternions (lookup tables).
struct ExactQuatLess {
  bool operator()(const ExactQuat& l, const ExactQuat& r) const {
    QSqrt2StructuralLess less;
    const auto lc = l.coords();
    const auto rc = r.coords();
    for (std::size_t n = 0; n < 4; ++n) {
      if (less(lc[n], rc[n])) return true;
      if (less(rc[n], lc[n])) return false;
    }
    return false;
  }
};

std::ostream& operator<<(std::ostream& os, const Quat& q);
std::ostream& operator<<(std::ostream& os, const ExactQuat& q);

/// Named points of S^3 used throughout: tau_u = (1+u)/sqrt2 and the four
/// omega points (1 +- i +- j +- k)/2 with at most one minus sign.
namespace elements {

ExactQuat one();
ExactQuat i();
ExactQuat j();
ExactQuat k();
ExactQuat tau_i();
ExactQuat tau_j();
ExactQuat tau_k();
ExactQuat omega_0();
ExactQuat omega_i();
ExactQuat omega_j();
ExactQuat omega_k();

}  // namespace elements

}  // namespace octaflag
