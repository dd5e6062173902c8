#include "octaflag/flag/distance.hpp"

#include "octaflag/error.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/rot/so3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>

namespace octaflag {
namespace {

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

}  // namespace

double flag_distance(const FlagPoint& a, const FlagPoint& b) {
  const Matrix3 rel = a.representative().matrix().transpose() * b.representative().matrix();
  double best = std::numeric_limits<double>::infinity();
  for (const Matrix3& t : torus()) best = std::min(best, 0.5 * rotation_angle(rel * t));
  return best;
}

double flag_distance_from_basepoint(const Quat& q) {
  require_unit(q);
  double best = std::numeric_limits<double>::infinity();
  for (double x : q.coords()) {
    best = std::min({best, clamped_acos(x), clamped_acos(-x)});
  }
  return best;
}

double flag_distance_quaternionic(const Quat& p, const Quat& q) {
  require_unit(p);
  require_unit(q);
  return flag_distance_from_basepoint(project_sphere(p.conj() * q));
}

namespace {

template <typename T>
double projective_distance(std::span<const T> p, std::span<const T> q) {
  if (p.size() != q.size()) throw DomainError("fubini_study_distance: dimension mismatch");
  T inner{};
  double np = 0.0, nq = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    if constexpr (std::is_same_v<T, double>) {
      inner += p[n] * q[n];
    } else {
      inner += std::conj(p[n]) * q[n];
    }
    np += std::norm(p[n]);
    nq += std::norm(q[n]);
  }
  if (np == 0.0 || nq == 0.0) throw DomainError("fubini_study_distance: zero vector");
  // Chord between q and the phase-aligned p; arccos|<p,q>| loses half the
  // digits near 0.
  const double a = std::abs(inner);
  const T phase = a == 0.0 ? T(1) : inner / a;
  const double sp = 1.0 / std::sqrt(np), sq = 1.0 / std::sqrt(nq);
  double chord = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) chord += std::norm(q[n] * sq - phase * p[n] * sp);
  return 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord)));
}

}  // namespace

double fubini_study_distance(std::span<const std::complex<double>> p,
                             std::span<const std::complex<double>> q) {
  return projective_distance(p, q);
}

double fubini_study_distance(std::span<const double> p, std::span<const double> q) {
  return projective_distance(p, q);
}

}  // namespace octaflag
