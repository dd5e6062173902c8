#include "octaflag/cli/verify.hpp"

#include "octaflag/error.hpp"
#include "octaflag/flag/flag_point.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/rot/so3.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace octaflag {

namespace {

constexpr double kPi = std::numbers::pi;

Vector3 random_vector(CounterRng& rng) { return {rng.normal(), rng.normal(), rng.normal()}; }

SkewMatrix random_skew_below_pi(CounterRng& rng) {
  const Vector3 v = random_vector(rng).normalized();
  return SkewMatrix(rng.uniform(0.0, kPi - 0.01) * v);
}

Rotation random_rotation_below_pi(CounterRng& rng) {
  for (;;) {
    const Rotation r = covering_map(random_unit_quaternion(rng));
    if (rotation_angle(r.matrix()) <= kPi - 0.01) return r;
  }
}

// 20-term power series, after scaling by 2^-s so that the norm is at most 1/2.
Matrix3 series_exp(const Matrix3& a) {
  int s = 0;
  double norm = a.norm();
  while (norm > 0.5) {
    norm /= 2.0;
    ++s;
  }
  const Matrix3 b = a / std::ldexp(1.0, s);
  Matrix3 sum = Matrix3::Identity(), term = Matrix3::Identity();
  for (int n = 1; n < 20; ++n) {
    term = term * b / n;
    sum += term;
  }
  for (int n = 0; n < s; ++n) sum = sum * sum;
  return sum;
}

}  // namespace

SuiteReport rot_suite(const VerifyOptions& options) {
  SuiteRunner s("rot", options);
  const auto& o = binary_octahedral_group();
  using namespace elements;

  s.exact("covering_homomorphism_exact", [&](Check& c) {
    std::vector<ExactMatrix3> images;
    for (const auto& g : o.elements()) images.push_back(covering_map(g));
    for (std::size_t a = 0; a < o.size(); ++a) {
      for (std::size_t b = 0; b < o.size(); ++b) {
        c.expect(images[o.multiply(a, b)] == images[a] * images[b],
                 [&] { return Json{{"inputs", {to_json(o.element(a)), to_json(o.element(b))}}}; });
      }
      c.expect(covering_map(-o.element(a)) == images[a]);
    }
  });

  s.exact("covering_weyl_lifts_exact", [&](Check& c) {
    c.expect(covering_map(tau_k()) == s_alpha_dot(), [] { return Json{{"inputs", "tau_k"}, {"expected", "s_alpha_dot"}}; });
    c.expect(covering_map(tau_i()) == s_beta_dot(), [] { return Json{{"inputs", "tau_i"}, {"expected", "s_beta_dot"}}; });
    c.expect(covering_map(one()) == ExactMatrix3::identity());
    c.expect(covering_map(i()) == ExactMatrix3::diagonal(1, -1, -1));
  });

  s.exact("covering_q8_onto_torus", [&](Check& c) {
    std::array<int, 4> hits{};
    for (const auto& g : quaternion_group().elements()) {
      const ExactMatrix3 b = covering_map(g);
      bool found = false;
      for (std::size_t t = 0; t < 4; ++t) {
        if (b == torus_exact()[t]) {
          ++hits[t];
          found = true;
        }
      }
      c.expect(found, [&] { return Json{{"inputs", to_json(g)}}; });
    }
    for (int h : hits) c.expect(h == 2);
  });

  s.numeric("covering_homomorphism_float", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const Quat p = random_unit_quaternion(c.rng()), q = random_unit_quaternion(c.rng());
      c.observe(max_abs_diff(covering_map(p * q).matrix(), (covering_map(p) * covering_map(q)).matrix()),
                [&] { return Json{{"inputs", {to_json(p), to_json(q)}}}; });
    }
  });

  s.numeric("differential_matrix", 1e-15, [&](Check& c) {
    for (std::size_t n = 0; n < std::min<std::size_t>(c.n(), 100); ++n) {
      const Vector3 u = random_vector(c.rng());
      Matrix3 want;
      want << 0, u.z(), -u.y(), -u.z(), 0, u.x(), u.y(), -u.x(), 0;
      want *= 2.0;
      c.observe(max_abs_diff(differential_b(u).matrix(), want));
    }
  });

  s.numeric("differential_isometry", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const Vector3 u = random_vector(c.rng()), v = random_vector(c.rng());
      const double got = g8_metric(differential_b(u), differential_b(v));
      c.observe(std::abs(got - u.dot(v)) / std::max(1.0, u.norm() * v.norm()),
                [&] { return Json{{"inputs", {{u.x(), u.y(), u.z()}, {v.x(), v.y(), v.z()}}}, {"expected", u.dot(v)}, {"got", got}}; });
    }
  });

  // The displayed d_1 B is the derivative of B along -u (see README, conventions).
  s.numeric("differential_vs_finite_difference", 1e-7, [&](Check& c) {
    const double h = 1e-6;
    for (std::size_t n = 0; n < std::min<std::size_t>(c.n(), 1000); ++n) {
      const Vector3 u = random_vector(c.rng());
      const Quat plus = project_sphere({1.0, h * u.x(), h * u.y(), h * u.z()});
      const Quat minus = project_sphere({1.0, -h * u.x(), -h * u.y(), -h * u.z()});
      const Matrix3 fd = (covering_map(plus).matrix() - covering_map(minus).matrix()) / (2.0 * h);
      c.observe(max_abs_diff(fd, differential_b(-u).matrix()) / std::max(1.0, u.norm()));
    }
  });

  s.numeric("skew_frobenius", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const SkewMatrix x(random_vector(c.rng()));
      c.observe(std::abs(x.matrix().norm() - x.frobenius_norm()));
      c.observe(std::abs(x.frobenius_norm() - std::sqrt(2.0) * x.vee().norm()));
    }
  });

  s.numeric("exp_known_values", 1e-12, [&](Check& c) {
    c.observe(max_abs_diff(exp_skew(SkewMatrix()).matrix(), Matrix3::Identity()));
    c.observe(max_abs_diff(exp_skew((kPi / 2) * u_alpha()).matrix(), s_alpha_dot().to_numeric()));
    c.observe(max_abs_diff(exp_skew((kPi / 2) * u_beta()).matrix(), s_beta_dot().to_numeric()));
  });

  s.numeric("exp_vs_series", 1e-10, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const SkewMatrix x = random_skew_below_pi(c.rng());
      c.observe(max_abs_diff(exp_skew(x).matrix(), series_exp(x.matrix())),
                [&] { return Json{{"inputs", to_json(x)}}; });
    }
  });

  s.numeric("exp_log_round_trip", 1e-9, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const Rotation r = random_rotation_below_pi(c.rng());
      c.observe(max_abs_diff(exp_skew(log_rotation(r)).matrix(), r.matrix()),
                [&] { return Json{{"inputs", to_json(r)}}; });
    }
  });

  s.numeric("log_known_values", 1e-12, [&](Check& c) {
    Matrix3 want;
    want << 0, 0, 0, 0, 0, -1, 0, 1, 0;
    want *= kPi / 2;
    const Matrix3 got = log_rotation(Rotation::trusted(s_beta_dot().to_numeric())).matrix();
    c.observe(max_abs_diff(got, want), [&] { return Json{{"inputs", "s_beta_dot"}, {"expected", to_json(want)}, {"got", to_json(got)}}; });
    c.observe(log_rotation(Rotation::identity()).vee().norm());
  });

  s.exact("log_angle_pi_rejected", [&](Check& c) {
    for (const auto& t : {ExactMatrix3::diagonal(1, -1, -1), ExactMatrix3::diagonal(-1, 1, -1)}) {
      bool threw = false;
      try {
        log_rotation(Rotation::trusted(t.to_numeric()));
      } catch (const DomainError&) {
        threw = true;
      }
      c.expect(threw);
    }
  });

  s.numeric("metric_arc_length", 1e-12, [&](Check& c) {
    const SkewMatrix x = log_rotation(Rotation::trusted(s_beta_dot().to_numeric()));
    c.observe(std::abs(arc_length(x, 1.0) - kPi / 4), [&] { return Json{{"inputs", "log s_beta_dot"}, {"expected", kPi / 4}}; });
    for (std::size_t n = 0; n < std::min<std::size_t>(c.n(), 1000); ++n) {
      const Vector3 u = random_vector(c.rng());
      c.observe(std::abs(g8_metric(differential_b(u), differential_b(u)) - u.squaredNorm()) / std::max(1.0, u.squaredNorm()));
    }
  });

  s.numeric("distance_from_identity", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const Quat q = random_unit_quaternion(c.rng());
      const double want = std::min(std::acos(q.w), std::acos(-q.w));
      const double got = so3_distance(Rotation::identity(), covering_map(q));
      c.observe(std::abs(got - want), [&] { return Json{{"inputs", to_json(q)}, {"expected", want}, {"got", got}}; });
    }
  });

  s.numeric("one_parameter_geodesics", 1e-9, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const SkewMatrix x(random_vector(c.rng()));
      const double a = c.rng().uniform(-2.0, 2.0);
      // Keep |t - s| ||X||_F / sqrt2 (the rotation angle of the difference) within pi.
      const double span = kPi / x.vee().norm();
      const double b = a + c.rng().uniform(-span, span);
      const double got = so3_distance(exp_skew(a * x), exp_skew(b * x));
      const double want = std::abs(b - a) * x.frobenius_norm() / (2.0 * std::sqrt(2.0));
      c.observe(std::abs(got - want), [&] { return Json{{"inputs", {{"vee", to_json(x)}, {"s", a}, {"t", b}}}, {"expected", want}, {"got", got}}; });
    }
  });

  return s.finish();
}

}  // namespace octaflag
