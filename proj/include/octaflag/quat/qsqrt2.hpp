#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace octaflag {

/// Exact element a + b*sqrt(2) of the field Q(sqrt 2).
///
/// Every coordinate of the binary octahedral group and every entry of the
/// rotation matrices it produces lives in this field, so group and torus
/// identities can be checked with exact equality.
class QSqrt2 {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  QSqrt2() = default;
  QSqrt2(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  /// p/q as an element of the rational subfield.
  static QSqrt2 ratio(long long p, long long q) { return {Rational(p, q), Rational(0)}; }
  static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }
  /// 1/sqrt(2) = sqrt(2)/2.
  static QSqrt2 inv_sqrt2() { return {Rational(0), Rational(1, 2)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Exact sign (-1, 0 or +1) of the real number a + b*sqrt(2).
  int sign() const;

  QSqrt2 operator-() const { return {-a_, -b_}; }
  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  /// Multiplicative inverse; throws DomainError on zero.
  QSqrt2 reciprocal() const;
  /// Galois conjugate a - b*sqrt(2).
  QSqrt2 galois_conjugate() const { return {a_, -b_}; }

  double to_double() const;
  std::string to_string() const;

  friend QSqrt2 operator+(QSqrt2 l, const QSqrt2& r) { return l += r; }
  friend QSqrt2 operator-(QSqrt2 l, const QSqrt2& r) { return l -= r; }
  friend QSqrt2 operator*(QSqrt2 l, const QSqrt2& r) { return l *= r; }
  friend QSqrt2 operator/(QSqrt2 l, const QSqrt2& r) { return l /= r; }

  friend bool operator==(const QSqrt2& l, const QSqrt2& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
  /// Ordering of the underlying real numbers.
  friend std::strong_ordering operator<=>(const QSqrt2& l, const QSqrt2& r);

 private:
  Rational a_{0};
  Rational b_{0};
};

/// Structural order on the pair (a, b); used for exact lookup tables only.
struct QSqrt2StructuralLess {
  bool operator()(const QSqrt2& l, const QSqrt2& r) const {
    if (l.rational_part() != r.rational_part()) return l.rational_part() < r.rational_part();
    return l.sqrt2_part() < r.sqrt2_part();
  }
};

std::ostream& operator<<(std::ostream& os, const QSqrt2& v);

}  // namespace octaflag
