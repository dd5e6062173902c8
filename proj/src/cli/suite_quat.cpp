#include "octaflag/cli/verify.hpp"

#include "octaflag/error.hpp"
#include "octaflag/flag/weyl.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace octaflag {

SuiteReport quat_suite(const VerifyOptions& options) {
  SuiteRunner s("quat", options);
  using namespace elements;
  const auto& q8 = quaternion_group();
  const auto& o = binary_octahedral_group();

  s.exact("defining_relations", [&](Check& c) {
    const ExactQuat minus_one = -one();
    c.expect(i() * j() == k(), [] { return Json{{"inputs", "i*j"}, {"expected", "k"}}; });
    for (const auto& u : {i(), j(), k()}) c.expect(u * u == minus_one);
    c.expect(i() * j() * k() == minus_one);
    c.expect(tau_i() * tau_i() == i(), [] { return Json{{"inputs", "tau_i^2"}, {"expected", "i"}}; });
    c.expect(omega_0() * omega_0() * omega_0() == minus_one,
             [] { return Json{{"inputs", "omega_0^3"}, {"expected", "-1"}}; });
  });

  s.exact("subgroup_orders", [&](Check& c) {
    const ExactQuat trivial[] = {one()};
    const auto g1 = generate_subgroup(trivial, kDefaultGroupBound, "1");
    for (auto [name, got, want] : {std::tuple{"<1>", g1.size(), std::size_t{1}},
                                   std::tuple{"<i,j>", q8.size(), std::size_t{8}},
                                   std::tuple{"<tau_i,tau_j>", o.size(), std::size_t{48}}}) {
      c.expect(got == want, [&] { return Json{{"inputs", name}, {"expected", want}, {"got", got}}; });
    }
  });

  s.exact("q8_elements", [&](Check& c) {
    std::set<ExactQuat, ExactQuatLess> want;
    for (const auto& u : {one(), i(), j(), k()}) {
      want.insert(u);
      want.insert(-u);
    }
    const std::set<ExactQuat, ExactQuatLess> got(q8.elements().begin(), q8.elements().end());
    c.expect(got == want);
  });

  s.exact("q8_normal_in_o", [&](Check& c) {
    for (const auto& g : o.elements()) {
      for (const auto& h : q8.elements()) {
        const ExactQuat conj = g * h * g.conj();
        c.expect(q8.contains(conj), [&] { return Json{{"inputs", {to_json(g), to_json(h)}}}; });
      }
    }
  });

  s.exact("o_coordinates", [&](Check& c) {
    std::vector<QSqrt2> allowed = {QSqrt2(0), QSqrt2(1), QSqrt2::ratio(1, 2), QSqrt2::inv_sqrt2()};
    for (std::size_t n = 1; n < 4; ++n) allowed.push_back(-allowed[n]);
    for (const auto& g : o.elements()) {
      for (const auto& x : {g.w, g.x, g.y, g.z}) {
        c.expect(std::find(allowed.begin(), allowed.end(), x) != allowed.end(),
                 [&] { return Json{{"inputs", to_json(g)}}; });
      }
    }
  });

  s.exact("norm_multiplicative", [&](Check& c) {
    for (const auto& p : o.elements()) {
      for (const auto& q : o.elements()) {
        c.expect((p * q).norm2() == QSqrt2(1) && p.norm2() == QSqrt2(1),
                 [&] { return Json{{"inputs", {to_json(p), to_json(q)}}}; });
      }
    }
  });

  s.exact("coset_label_table", [&](Check& c) {
    const WeylElement sa = WeylElement::s_alpha(), sb = WeylElement::s_beta();
    const std::tuple<const char*, ExactQuat, WeylElement> table[] = {
        {"tau_i", tau_i(), sb},           {"tau_j", tau_j(), WeylElement::w0()},
        {"tau_k", tau_k(), sa},           {"omega_i", omega_i(), sb * sa},
        {"omega_j", omega_j(), sb * sa},  {"omega_k", omega_k(), sb * sa},
        {"omega_0", omega_0(), sa * sb},  {"i", i(), WeylElement::identity()}};
    for (const auto& [name, g, want] : table) {
      const WeylElement got = octahedral_coset_label(g);
      c.expect(got == want,
               [&] { return Json{{"inputs", name}, {"expected", want.name()}, {"got", got.name()}}; });
    }
  });

  s.exact("coset_label_homomorphism", [&](Check& c) {
    for (std::size_t a = 0; a < o.size(); ++a) {
      for (std::size_t b = 0; b < o.size(); ++b) {
        const auto lab = octahedral_coset_label(o.element(o.multiply(a, b)));
        c.expect(lab == octahedral_coset_label(o.element(a)) * octahedral_coset_label(o.element(b)),
                 [&] { return Json{{"inputs", {a, b}}}; });
      }
    }
  });

  s.exact("coset_label_fibers", [&](Check& c) {
    std::array<std::size_t, WeylElement::kOrder> count{};
    for (const auto& g : o.elements()) ++count[octahedral_coset_label(g).index()];
    for (std::size_t w = 0; w < count.size(); ++w) {
      c.expect(count[w] == 8, [&] {
        return Json{{"inputs", WeylElement::from_index(w).name()}, {"expected", 8}, {"got", count[w]}};
      });
    }
  });

  s.exact("label_outside_o_rejected", [&](Check& c) {
    bool threw = false;
    try {
      octahedral_coset_label(omega_0() * tau_i());
      const ExactQuat outside{QSqrt2::ratio(3, 5), QSqrt2::ratio(4, 5), QSqrt2(0), QSqrt2(0)};
      octahedral_coset_label(outside);
    } catch (const DomainError&) {
      threw = true;
    }
    c.expect(threw);
  });

  s.numeric("spherical_tau_k", 1e-12, [&](Check& c) {
    const SphericalCoords sc = to_spherical(to_numeric(tau_k()));
    const double pi = std::numbers::pi;
    c.observe(std::max({std::abs(sc.omega - pi / 4), std::abs(sc.phi - pi / 2), std::abs(sc.theta - pi / 2)}),
              [&] { return Json{{"inputs", "tau_k"}, {"got", {sc.omega, sc.phi, sc.theta}}}; });
    const SphericalCoords at_one = to_spherical(Quat::identity());
    c.observe(std::max({at_one.omega, at_one.phi, at_one.theta}));
  });

  s.numeric("spherical_round_trip", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const Quat q = random_unit_quaternion(c.rng());
      const Quat back = from_spherical(to_spherical(q));
      c.observe(max_abs_diff(q, back), [&] { return Json{{"inputs", to_json(q)}, {"got", to_json(back)}}; });
    }
  });

  s.numeric("round_geodesic_endpoints", 1e-12, [&](Check& c) {
    for (std::size_t n = 0; n < c.n(); ++n) {
      const Quat q = random_unit_quaternion(c.rng());
      c.observe(max_abs_diff(round_geodesic(q, 0.0), Quat::identity()));
      c.observe(max_abs_diff(round_geodesic(q, 1.0), q), [&] { return Json{{"inputs", to_json(q)}}; });
      c.observe(std::abs(sphere_distance(Quat::identity(), q) - std::acos(std::clamp(q.w, -1.0, 1.0))));
    }
  });

  s.exact("round_geodesic_antipodal_rejected", [&](Check& c) {
    bool threw = false;
    try {
      round_geodesic(-Quat::identity(), 0.5);
    } catch (const DomainError&) {
      threw = true;
    }
    c.expect(threw);
  });

  s.numeric("sphere_distance_metric", 1e-12, [&](Check& c) {
    const std::size_t m = std::min<std::size_t>(c.n(), 1000);
    for (std::size_t n = 0; n < m; ++n) {
      const Quat p = random_unit_quaternion(c.rng());
      const Quat q = random_unit_quaternion(c.rng());
      const Quat r = random_unit_quaternion(c.rng());
      const double pq = sphere_distance(p, q), qr = sphere_distance(q, r), pr = sphere_distance(p, r);
      c.observe(std::max(0.0, pr - pq - qr), [&] {
        return Json{{"inputs", {to_json(p), to_json(q), to_json(r)}}, {"got", {pq, qr, pr}}};
      });
      c.observe(std::abs(pq - sphere_distance(q, p)));
      c.observe(sphere_distance(p, p));
    }
  });

  return s.finish();
}

}  // namespace octaflag
