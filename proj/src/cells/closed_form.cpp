#include "octaflag/cells/closed_form.hpp"

#include "octaflag/error.hpp"
#include "octaflag/flag/geodesic.hpp"
#include "octaflag/rot/so3.hpp"

#include <cmath>
#include <numbers>

namespace octaflag {

namespace {

// Number of w_0 conjugations taking (i, j) to (u, v).
int rotation_steps(Axis u, Axis v) {
  if (u == Axis::i && v == Axis::j) return 0;
  if (u == Axis::j && v == Axis::k) return 1;
  if (u == Axis::k && v == Axis::i) return 2;
  throw DomainError(std::string("closed form supports (i,j), (j,k), (k,i); got (") +
                    axis_name(u) + "," + axis_name(v) + ")");
}

void require_open(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string("closed form parameter ") + name + " must lie in (0, 1)");
  }
}

Quat axis_unit(Axis a) {
  switch (a) {
    case Axis::i: return {0.0, 1.0, 0.0, 0.0};
    case Axis::j: return {0.0, 0.0, 1.0, 0.0};
    default: return {0.0, 0.0, 0.0, 1.0};
  }
}

Quat omega_of(Axis a) {
  switch (a) {
    case Axis::i: return to_numeric(elements::omega_i());
    case Axis::j: return to_numeric(elements::omega_j());
    default: return to_numeric(elements::omega_k());
  }
}

}  // namespace

char axis_name(Axis a) {
  switch (a) {
    case Axis::i: return 'i';
    case Axis::j: return 'j';
    default: return 'k';
  }
}

Axis parse_axis(char c) {
  switch (c) {
    case 'i': return Axis::i;
    case 'j': return Axis::j;
    case 'k': return Axis::k;
    default: throw DomainError(std::string("unknown axis label: ") + c);
  }
}

SkewMatrix closed_form_generator(Axis u, Axis v, double t) {
  const int steps = rotation_steps(u, v);
  require_open(t, "t");
  const double c = std::cos(t * std::numbers::pi / 4.0);
  const double d = std::sin(t * std::numbers::pi / 4.0);
  const double sn = std::sin(t * std::numbers::pi / 2.0);
  const double r = std::sqrt(std::max(0.0, 1.0 - sn));
  const double scale = 2.0 * std::acos((c + d) / 2.0) / std::sqrt(3.0 - sn);
  Matrix3 m;
  m << 0.0, r, -c - d,
       -r, 0.0, d - c,
       c + d, c - d, 0.0;
  m *= scale;
  const Matrix3 p = covering_map(to_numeric(elements::omega_0())).matrix();
  for (int n = 0; n < steps; ++n) m = p * m * p.transpose();
  return SkewMatrix::from_matrix(m);
}

FlagPoint param_cell_closed_form(Axis u, Axis v, double s, double t) {
  const SkewMatrix x = closed_form_generator(u, v, t);
  require_open(s, "s");
  return FlagPoint(exp_skew(s * x));
}

FlagPoint param_cell_gamma_form(Axis u, Axis v, double s, double t) {
  rotation_steps(u, v);
  require_open(s, "s");
  require_open(t, "t");
  const double a = t * std::numbers::pi / 4.0;
  const Quat q = std::cos(a) * Quat::identity() - std::sin(a) * axis_unit(u);
  return flag_geodesic(q * omega_of(u).conj(), s);
}

CellId closed_form_cell(Axis u, Axis v) {
  // The sheet is the cone over tau_v - w_u, part of the 2-cell whose broken
  // path starts there.
  switch (rotation_steps(u, v)) {
    case 0: return {2, 2};
    case 1: return {2, 3};
    default: return {2, 1};
  }
}

}  // namespace octaflag
