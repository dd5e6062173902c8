#include "octaflag/cli/verify.hpp"

#include "octaflag/flag/distance.hpp"
#include "octaflag/flag/flag_point.hpp"
#include "octaflag/flag/geodesic.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/rot/so3.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace octaflag {

namespace {

constexpr double kPi = std::numbers::pi;

FlagPoint random_flag(CounterRng& rng) { return FlagPoint(covering_map(random_unit_quaternion(rng))); }

// Unit quaternion with 0 < omega < pi/2 (positive real part).
Quat random_short(CounterRng& rng) {
  for (;;) {
    Quat q = random_unit_quaternion(rng);
    if (q.w < 0) q = -q;
    if (q.w > 1e-9 && q.w < 1.0) return q;
  }
}

}  // namespace

SuiteReport flag_suite(const VerifyOptions& options) {
  SuiteRunner s("flag", options);
  const auto& o = binary_octahedral_group();
  using namespace elements;

  s.exact("torus_klein_four", [&](Check& c) {
    const auto& t = torus_exact();
    for (const auto& a : t) {
      c.expect(is_rotation(a) && a * a == ExactMatrix3::identity());
      for (const auto& b : t) c.expect(in_torus(a * b) && a * b == b * a);
    }
  });

  s.exact("weyl_relations", [&](Check& c) {
    const WeylElement sa = WeylElement::s_alpha(), sb = WeylElement::s_beta(), e = WeylElement::identity();
    c.expect(sa * sa == e && sb * sb == e);
    c.expect(sa * sb * sa * sb * sa * sb == e);
    c.expect(WeylElement::w0() == sb * sa * sb);
    for (const auto& w : WeylElement::all()) {
      c.expect(weyl_class(weyl_lift(w)) == w, [&] { return Json{{"inputs", w.name()}}; });
      for (const auto& v : WeylElement::all()) {
        // The lifts multiply like W modulo T(R).
        c.expect(in_torus((weyl_lift(w) * weyl_lift(v)).transpose() * weyl_lift(w * v)));
      }
    }
  });

  s.numeric("weyl_action_well_defined", 1e-9, [&](Check& c) {
    for (std::size_t n = 0; n < 20; ++n) {
      const FlagPoint f = random_flag(c.rng());
      for (const auto& w : WeylElement::all()) {
        const FlagPoint fw = f * w;
        for (const auto& t : torus()) {
          const FlagPoint moved = FlagPoint(f.representative() * Rotation::trusted(t)) * w;
          const Matrix3 m = fw.representative().matrix().transpose() * moved.representative().matrix();
          double err = 1e300;
          for (const auto& u : torus()) err = std::min(err, max_abs_diff(m, u));
          c.observe(err, [&] { return Json{{"inputs", {{"flag", to_json(f)}, {"w", w.name()}}}}; });
        }
      }
    }
  });

  s.exact("phi_known_values", [&](Check& c) {
    c.expect(flag_eq(phi(tau_k()), ExactFlagPoint(s_alpha_dot())), [] { return Json{{"inputs", "tau_k"}, {"expected", "s_alpha_dot T"}}; });
    c.expect(flag_eq(phi(i()), ExactFlagPoint(ExactMatrix3::identity())));
    c.expect(!flag_eq(ExactFlagPoint(s_alpha_dot()), ExactFlagPoint(ExactMatrix3::identity())));
    c.expect(flag_eq(ExactFlagPoint(s_alpha_dot()), ExactFlagPoint(s_alpha_dot() * ExactMatrix3::diagonal(1, -1, -1))));
  });

  s.exact("phi_equivariance_exact", [&](Check& c) {
    for (const auto& q : o.elements()) {
      const ExactFlagPoint fq = phi(q);
      for (const auto& g : o.elements()) {
        c.expect(flag_eq(phi(q * g), fq * octahedral_coset_label(g)),
                 [&] { return Json{{"inputs", {to_json(q), to_json(g)}}}; });
      }
      for (const auto& h : quaternion_group().elements()) c.expect(flag_eq(phi(q * h), fq));
    }
  });

  s.numeric("phi_equivariance_float", 1e-9, [&](Check& c) {
    for (std::size_t n = 0; n < std::min<std::size_t>(c.n(), 200); ++n) {
      const Quat q = random_unit_quaternion(c.rng());
      for (const auto& g : o.elements()) {
        const FlagPoint a = phi(q * to_numeric(g)), b = phi(q) * octahedral_coset_label(g);
        c.observe(flag_eq(a, b, c.tol()) ? 0.0 : flag_distance(a, b), [&] { return Json{{"inputs", {to_json(q), to_json(g)}}}; });
      }
    }
  });

  s.numeric("distance_known_values", 1e-12, [&](Check& c) {
    const double d1 = flag_distance(basepoint(), phi(to_numeric(tau_i()).conj()));
    c.observe(std::abs(d1 - kPi / 4), [&] { return Json{{"inputs", "tau_i^-1"}, {"expected", kPi / 4}, {"got", d1}}; });
    const double d2 = flag_distance(basepoint(), phi(to_numeric(omega_0())));
    c.observe(std::abs(d2 - kPi / 3), [&] { return Json{{"inputs", "omega_0"}, {"expected", kPi / 3}, {"got", d2}}; });
    const FlagPoint f = random_flag(c.rng());
    c.observe(flag_distance(f, f));
  });

  s.numeric("distance_algorithms_agree", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const Quat q = random_unit_quaternion(c.rng());
      const double a = flag_distance(basepoint(), phi(q));
      const double b = flag_distance_from_basepoint(q);
      c.observe(std::abs(a - b), [&] { return Json{{"inputs", to_json(q)}, {"expected", b}, {"got", a}}; });
    }
  });

  s.numeric("weyl_isometries", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const FlagPoint f = random_flag(c.rng()), g = random_flag(c.rng());
      const double d = flag_distance(f, g);
      for (const auto& w : WeylElement::all()) {
        c.observe(std::abs(flag_distance(f * w, g * w) - d), [&] { return Json{{"inputs", {to_json(f), to_json(g), w.name()}}}; });
      }
    }
  });

  s.exact("weyl_action_free", [&](Check& c) {
    for (std::size_t n = 0; n < 100; ++n) {
      const FlagPoint f = random_flag(c.rng());
      for (const auto& w : WeylElement::all()) {
        const bool fixed = flag_eq(f * w, f);
        c.expect(fixed == (w == WeylElement::identity()), [&] { return Json{{"inputs", {to_json(f), w.name()}}}; });
      }
    }
  });

  s.numeric("canonical_representative", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < std::min<std::size_t>(c.n(), 1000); ++n) {
      const FlagPoint f = random_flag(c.rng());
      const Rotation r = canonical(f);
      c.observe(max_abs_diff(canonical(FlagPoint(r)).matrix(), r.matrix()));
      for (const auto& t : torus()) {
        c.observe(max_abs_diff(canonical(FlagPoint(f.representative() * Rotation::trusted(t))).matrix(), r.matrix()));
      }
    }
  });

  s.numeric("x_q_known_value", 1e-12, [&](Check& c) {
    const Matrix3 x = x_q(to_numeric(tau_k())).matrix();
    c.observe(max_abs_diff(x, log_rotation(Rotation::trusted(s_alpha_dot().to_numeric())).matrix()));
    Matrix3 want;
    want << 0, -1, 0, 1, 0, 0, 0, 0, 0;
    c.observe(max_abs_diff(x, (kPi / 2) * want), [&] { return Json{{"inputs", "tau_k"}, {"got", to_json(x)}}; });
  });

  s.numeric("geodesic_endpoint", 1e-9, [&](Check& c) {
    for (std::size_t n = 0; n < std::min<std::size_t>(c.n(), 1000); ++n) {
      const Quat q = random_short(c.rng());
      const FlagPoint end = flag_geodesic(q, 1.0);
      c.observe(flag_eq(end, phi(q), c.tol()) ? 0.0 : flag_distance(end, phi(q)),
                [&] { return Json{{"inputs", to_json(q)}, {"expected", to_json(phi(q))}, {"got", to_json(end)}}; });
      c.observe(max_abs_diff(flag_geodesic(q, 0.0).representative().matrix(), Matrix3::Identity()));
    }
  });

  s.numeric("geodesic_arc_length", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const Quat q = random_short(c.rng());
      const double t = c.rng().uniform();
      const double omega = to_spherical(q).omega;
      c.observe(std::abs(arc_length(x_q(q), t) - t * omega), [&] { return Json{{"inputs", {to_json(q), t}}}; });
    }
  });

  s.exact("geodesic_regime_rejected", [&](Check& c) {
    for (const Quat& q : {Quat::identity(), Quat{0.0, 1.0, 0.0, 0.0}, Quat{-0.6, 0.8, 0.0, 0.0}}) {
      bool threw = false;
      try {
        x_q(q);
      } catch (const std::domain_error&) {
        threw = true;
      }
      c.expect(threw, [&] { return Json{{"inputs", to_json(q)}}; });
    }
  });

  s.numeric("fubini_study", 1e-12, [&](Check& c) {
    using C = std::complex<double>;
    const std::array<C, 2> e1{C(1, 0), C(0, 0)}, e2{C(0, 0), C(0, 2)};
    c.observe(std::abs(fubini_study_distance(e1, e2) - kPi / 2));
    c.observe(fubini_study_distance(e2, e2));
    const std::array<C, 2> phase{C(0, 3), C(0, 0)};
    c.observe(fubini_study_distance(e1, phase));
    for (std::size_t n = 0; n < std::min<std::size_t>(c.n(), 1000); ++n) {
      const double a = c.rng().uniform(0.0, 2 * kPi), b = c.rng().uniform(0.0, 2 * kPi);
      const std::array<double, 2> p{std::cos(a), std::sin(a)}, q{std::cos(b), std::sin(b)};
      const double circle = std::abs(std::remainder(a - b, 2 * kPi));
      const double brute = std::min(circle, kPi - circle);  // min over q and -q
      c.observe(std::abs(fubini_study_distance(p, q) - brute), [&] { return Json{{"inputs", {a, b}}, {"expected", brute}}; });
    }
  });

  return s.finish();
}

}  // namespace octaflag
