#pragma once

#include "octaflag/flag/weyl.hpp"
#include "octaflag/quat/quaternion.hpp"
#include "octaflag/rot/rotation.hpp"

#include <array>

namespace octaflag {

/// T(R): the diagonal sign matrices of determinant 1, in the order
/// I, diag(1,-1,-1), diag(-1,1,-1), diag(-1,-1,1).
const std::array<ExactMatrix3, 4>& torus_exact();
const std::array<Matrix3, 4>& torus();

/// Membership in T(R): off-diagonals below tol, diagonals within tol of +-1, det +1.
bool in_torus(const Matrix3& m, double tol = kRotationTolerance);
bool in_torus(const ExactMatrix3& m);

/// Lifted Weyl generators in N(T).
ExactMatrix3 s_alpha_dot();  // [[0,-1,0],[1,0,0],[0,0,1]]
ExactMatrix3 s_beta_dot();   // [[1,0,0],[0,0,-1],[0,1,0]]
/// Product of the lifted generators along the reduced word of w.
ExactMatrix3 weyl_lift(const WeylElement& w);
/// Class in W = N(T)/T of a signed permutation matrix of determinant 1.
WeylElement weyl_class(const ExactMatrix3& m);

/// A point R T(R) of the real flag manifold SO3(R)/T(R).
class FlagPoint {
 public:
  FlagPoint() = default;
  explicit FlagPoint(const Rotation& representative) : rep_(representative) {}

  const Rotation& representative() const { return rep_; }

  /// Right Weyl action R T -> R w' T for any lift w' of w.
  FlagPoint operator*(const WeylElement& w) const;

 private:
  Rotation rep_;
};

/// Checked construction from a 3x3 matrix; throws DomainError if not a rotation.
FlagPoint flag_point(const Matrix3& m);
inline FlagPoint flag_point(const Rotation& r) { return FlagPoint(r); }
/// The basepoint 1 T(R).
inline FlagPoint basepoint() { return FlagPoint(); }

/// R1 T = R2 T, tested through R1^T R2 in T(R) within tol.
bool flag_eq(const FlagPoint& a, const FlagPoint& b, double tol = kRotationTolerance);

/// Among the four translates R t, the lexicographically largest in row-major
/// order (ties go to the first torus element).
Rotation canonical(const FlagPoint& f);

/// Exact flag point over Q(sqrt 2) (images of group elements).
class ExactFlagPoint {
 public:
  /// Throws DomainError if `representative` is not exactly a rotation.
  explicit ExactFlagPoint(ExactMatrix3 representative);

  const ExactMatrix3& representative() const { return rep_; }
  ExactFlagPoint operator*(const WeylElement& w) const;
  FlagPoint to_numeric() const { return FlagPoint(Rotation::trusted(rep_.to_numeric())); }

 private:
  ExactMatrix3 rep_;
};

bool flag_eq(const ExactFlagPoint& a, const ExactFlagPoint& b);
ExactMatrix3 canonical(const ExactFlagPoint& f);

/// phi(q Q8) = B(q) T(R): the identification S^3/Q8 -> F(R), with Q8 acting
/// on the right so that phi(q g) = phi(q) * label(g) for g in O.
FlagPoint phi(const Quat& q);
ExactFlagPoint phi(const ExactQuat& q);

}  // namespace octaflag
