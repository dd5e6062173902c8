#include "octaflag/quat/qsqrt2.hpp"

#include "octaflag/error.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace octaflag {
namespace {

int sign_of(const QSqrt2::Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

int QSqrt2::sign() const {
  int sa = sign_of(a_);
  int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 2 b^2.
  Rational diff = a_ * a_ - 2 * b_ * b_;
  return sa * sign_of(diff);
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) { return *this *= o.reciprocal(); }

QSqrt2 QSqrt2::reciprocal() const {
  if (is_zero()) throw DomainError("QSqrt2: reciprocal of zero");
  // a^2 - 2 b^2 != 0 because sqrt(2) is irrational.
  Rational n = a_ * a_ - 2 * b_ * b_;
  return {a_ / n, -b_ / n};
}

double QSqrt2::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * 1.41421356237309504880;
}

std::string QSqrt2::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::strong_ordering operator<=>(const QSqrt2& l, const QSqrt2& r) {
  int s = (l - r).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& v) {
  if (v.sqrt2_part() == 0) return os << v.rational_part();
  if (v.rational_part() != 0) os << v.rational_part() << (v.sqrt2_part() > 0 ? "+" : "");
  return os << v.sqrt2_part() << "*sqrt2";
}

}  // namespace octaflag
