#include "octaflag/flag/flag_point.hpp"

#include "octaflag/error.hpp"
#include "octaflag/rot/so3.hpp"

#include <algorithm>

namespace octaflag {

const std::array<ExactMatrix3, 4>& torus_exact() {
  static const std::array<ExactMatrix3, 4> t = {
      ExactMatrix3::diagonal(1, 1, 1), ExactMatrix3::diagonal(1, -1, -1),
      ExactMatrix3::diagonal(-1, 1, -1), ExactMatrix3::diagonal(-1, -1, 1)};
  return t;
}

const std::array<Matrix3, 4>& torus() {
  static const std::array<Matrix3, 4> t = [] {
    std::array<Matrix3, 4> out;
    for (std::size_t n = 0; n < 4; ++n) out[n] = torus_exact()[n].to_numeric();
    return out;
  }();
  return t;
}

bool in_torus(const Matrix3& m, double tol) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r == c) {
        if (std::abs(std::abs(m(r, c)) - 1.0) > tol) return false;
      } else if (std::abs(m(r, c)) > tol) {
        return false;
      }
    }
  }
  return m(0, 0) * m(1, 1) * m(2, 2) > 0;
}

bool in_torus(const ExactMatrix3& m) {
  return std::find(torus_exact().begin(), torus_exact().end(), m) != torus_exact().end();
}

ExactMatrix3 s_alpha_dot() { return ExactMatrix3::from_ints({0, -1, 0, 1, 0, 0, 0, 0, 1}); }
ExactMatrix3 s_beta_dot() { return ExactMatrix3::from_ints({1, 0, 0, 0, 0, -1, 0, 1, 0}); }

ExactMatrix3 weyl_lift(const WeylElement& w) {
  ExactMatrix3 m = ExactMatrix3::identity();
  for (SimpleReflection s : w.reduced_word()) {
    m = m * (s == SimpleReflection::alpha ? s_alpha_dot() : s_beta_dot());
  }
  return m;
}

WeylElement weyl_class(const ExactMatrix3& m) {
  if (!is_rotation(m)) throw DomainError("weyl_class: not a rotation");
  std::array<int, 3> image{-1, -1, -1};
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) {
      const QSqrt2& v = m(r, c);
      if (v.is_zero()) continue;
      if (image[c] != -1 || !(v == QSqrt2(1) || v == QSqrt2(-1))) {
        throw DomainError("weyl_class: not a signed permutation matrix");
      }
      image[c] = r;
    }
  }
  return WeylElement::from_permutation(image);
}

namespace {

const std::array<Rotation, 6>& numeric_weyl_lifts() {
  static const std::array<Rotation, 6> lifts = [] {
    std::array<Rotation, 6> out;
    for (const auto& w : WeylElement::all()) out[w.index()] = Rotation::trusted(weyl_lift(w).to_numeric());
    return out;
  }();
  return lifts;
}

}  // namespace

FlagPoint FlagPoint::operator*(const WeylElement& w) const {
  return FlagPoint(rep_ * numeric_weyl_lifts()[w.index()]);
}

FlagPoint flag_point(const Matrix3& m) { return FlagPoint(Rotation::from_matrix(m)); }

bool flag_eq(const FlagPoint& a, const FlagPoint& b, double tol) {
  return in_torus(a.representative().matrix().transpose() * b.representative().matrix(), tol);
}

namespace {

template <typename M>
bool lex_greater(const M& a, const M& b) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (a(r, c) > b(r, c)) return true;
      if (b(r, c) > a(r, c)) return false;
    }
  }
  return false;
}

}  // namespace

Rotation canonical(const FlagPoint& f) {
  const Matrix3& r = f.representative().matrix();
  Matrix3 best = r * torus()[0];
  for (std::size_t n = 1; n < 4; ++n) {
    Matrix3 cand = r * torus()[n];
    if (lex_greater(cand, best)) best = cand;
  }
  return Rotation::trusted(best);
}

ExactFlagPoint::ExactFlagPoint(ExactMatrix3 representative) : rep_(std::move(representative)) {
  if (!is_rotation(rep_)) throw DomainError("ExactFlagPoint: representative is not a rotation");
}

ExactFlagPoint ExactFlagPoint::operator*(const WeylElement& w) const {
  return ExactFlagPoint(rep_ * weyl_lift(w));
}

bool flag_eq(const ExactFlagPoint& a, const ExactFlagPoint& b) {
  return in_torus(a.representative().transpose() * b.representative());
}

ExactMatrix3 canonical(const ExactFlagPoint& f) {
  ExactMatrix3 best = f.representative() * torus_exact()[0];
  for (std::size_t n = 1; n < 4; ++n) {
    ExactMatrix3 cand = f.representative() * torus_exact()[n];
    if (lex_greater(cand, best)) best = std::move(cand);
  }
  return best;
}

FlagPoint phi(const Quat& q) { return FlagPoint(covering_map(q)); }
ExactFlagPoint phi(const ExactQuat& q) { return ExactFlagPoint(covering_map(q)); }

}  // namespace octaflag
