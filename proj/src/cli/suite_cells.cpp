#include "octaflag/cli/verify.hpp"

#include "octaflag/cells/cell.hpp"
#include "octaflag/cells/closed_form.hpp"
#include "octaflag/cells/fundamental_domain.hpp"
#include "octaflag/cells/join.hpp"
#include "octaflag/cells/partition.hpp"
#include "octaflag/flag/distance.hpp"
#include "octaflag/flag/flag_point.hpp"
#include "octaflag/flag/geodesic.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/rot/so3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace octaflag {

namespace {

constexpr double kPi = std::numbers::pi;

// Max-norm gap between two flag points, minimized over the torus.
double flag_gap(const FlagPoint& a, const FlagPoint& b) {
  const Matrix3 m = a.representative().matrix().transpose() * b.representative().matrix();
  double best = 1e300;
  for (const auto& t : torus()) best = std::min(best, max_abs_diff(m, t));
  return best;
}

// Number of (translate, open cell) pairs of the S^3 decomposition containing x.
std::size_t sphere_multiplicity(const Quat& x) {
  std::size_t hits = 0;
  for (std::size_t g = 0; g < binary_octahedral_group().size(); ++g) {
    for (CellId id : representative_cells()) {
      id.translate = g;
      if (in_sphere_cell(x, id)) ++hits;
    }
  }
  return hits;
}

Json report_json(const CoveringReport& r) {
  Json mult = Json::object();
  for (const auto& [k, v] : r.multiplicity) mult[std::to_string(k)] = v;
  return Json{{"n", r.n},
              {"coverage_failures", r.coverage_failures},
              {"boundary_band_points", r.boundary_band_points},
              {"partition_checked", r.partition_checked},
              {"partition_failures", r.partition_failures},
              {"multiplicity", mult}};
}

}  // namespace

SuiteReport cells_suite(const VerifyOptions& options) {
  SuiteRunner s("cells", options);
  using namespace elements;

  s.exact("inverted_vertices_positive", [&](Check& c) {
    const QSqrt2 half = QSqrt2::ratio(1, 2), one_over_root2 = QSqrt2::inv_sqrt2();
    for (const auto& tet : inverted_octahedral_tetrahedra()) {
      for (const auto& v : tet.vertices) {
        c.expect(v.w > QSqrt2(0), [&] { return Json{{"inputs", tet.label}, {"got", to_json(v)}}; });
        c.expect(v.w == half || v.w == one_over_root2 || v.w == QSqrt2(1),
                 [&] { return Json{{"inputs", tet.label}, {"got", to_json(v)}}; });
      }
    }
  });

  s.exact("delta1_vertices", [&](Check& c) {
    const auto& d1 = inverted_octahedral_tetrahedra()[0];
    const std::array<ExactQuat, 4> want{one(), tau_i().conj(), tau_j().conj(), omega_0().conj()};
    c.expect(d1.vertices == want, [&] { return Json{{"inputs", d1.label}}; });
    for (const auto& tet : inverted_octahedral_tetrahedra()) c.expect(tet.vertices[0] == one());
  });

  s.exact("cell_counts", [&](Check& c) {
    c.expect(representative_counts() == std::array<std::size_t, 4>{1, 3, 3, 1});
    const auto counts = sphere_cell_counts();
    c.expect(counts == std::map<int, std::size_t>{{0, 48}, {1, 144}, {2, 144}, {3, 48}});
    c.expect(euler_characteristic(counts) == 0);
  });

  s.exact("join_membership_examples", [&](Check& c) {
    const Quat ti = to_numeric(tau_i());
    const JoinSpec closed({Quat::identity(), ti}, Openness::closed);
    const Quat mid = project_sphere(Quat::identity() + ti);
    c.expect(join_membership(ti, closed) && join_membership(Quat::identity(), closed));
    c.expect(join_membership(mid, closed) && join_membership(mid, closed, Openness::open));
    c.expect(!join_membership(ti, closed, Openness::open));
    const JoinSpec d1 = fundamental_domain_octahedral(Openness::open)[0];
    c.expect(!join_membership(to_numeric(tau_j()).conj(), d1));
    c.expect(join_membership(to_numeric(tau_j()).conj(), d1, Openness::closed));
    c.expect(!join_membership(-mid, closed));
  });

  s.exact("covering_and_partition", [&](Check& c) {
    const CoveringReport r = covering_and_partition_check(c.n(), c.seed());
    const Json details = report_json(r);
    c.expect(r.coverage_failures == 0 && r.partition_failures == 0, [&] { return Json{{"got", details}}; });
    c.expect(r.partition_checked + r.boundary_band_points == r.n);
    s.results()["covering"] = details;
  });

  s.exact("interior_point_multiplicity", [&](Check& c) {
    for (std::size_t n = 0; n < 20; ++n) {
      std::array<double, 4> lambda{};
      double sum = 0.0;
      for (auto& l : lambda) sum += (l = -std::log(1.0 - c.rng().uniform()) + 1e-3);
      Quat x{0.0, 0.0, 0.0, 0.0};
      const auto& v = inverted_octahedral_tetrahedra()[0].vertices;
      for (std::size_t m = 0; m < 4; ++m) x = x + (lambda[m] / sum) * to_numeric(v[m]);
      x = project_sphere(x);
      const std::size_t hits = sphere_multiplicity(x);
      c.expect(hits == 1, [&] { return Json{{"inputs", to_json(x)}, {"expected", 1}, {"got", hits}}; });
    }
  });

  s.exact("lower_dimensional_pieces_null", [&](Check& c) {
    std::vector<const JoinSpec*> thin;
    for (const CellId& id : representative_cells()) {
      for (const auto& piece : cell_pieces(id)) {
        if (piece.vertices().size() <= 3) thin.push_back(&piece);
      }
    }
    std::size_t hits = 0;
    for (std::size_t n = 0; n < c.n(); ++n) {
      const Quat x = random_unit_quaternion(c.rng());
      for (const JoinSpec* piece : thin) hits += join_membership(x, *piece, Openness::closed) ? 1 : 0;
    }
    c.expect(hits == 0, [&] { return Json{{"expected", 0}, {"got", hits}}; });
  });

  s.exact("inversion_consistency", [&](Check& c) {
    for (const CellId& rep : representative_cells()) {
      std::vector<JoinSpec> original;
      for (const auto& piece : cell_piece_vertices(rep)) {
        std::vector<Quat> v;
        for (const auto& q : piece) v.push_back(to_numeric(q.conj()));
        original.emplace_back(std::move(v), Openness::open);
      }
      for (std::size_t n = 0; n < 50; ++n) {
        const CellSample a = sample_cell(rep, CellLevel::sphere, c.rng());
        const bool in_original =
            rep.dim == 0 ? max_abs_diff(a.sphere, Quat::identity()) < 1e-12
                         : std::any_of(original.begin(), original.end(),
                                       [&](const JoinSpec& j) { return join_membership(a.sphere.conj(), j); });
        c.expect(in_original && in_sphere_cell(a.sphere, rep) && in_flag_cell(a.flag, rep),
                 [&] { return Json{{"inputs", {rep.label(), to_json(a.sphere)}}}; });

        CellId moved = rep;
        moved.translate = static_cast<std::size_t>(c.rng().next_u64() % 6);
        const CellSample b = sample_cell(moved, CellLevel::flag, c.rng());
        c.expect(in_flag_cell(b.flag, moved) && flag_eq(phi(b.sphere), b.flag, 1e-9),
                 [&] { return Json{{"inputs", {moved.label(), moved.translate, b.s, b.t}}}; });
        for (std::size_t w = 0; w < 6; ++w) {
          CellId other = moved;
          other.translate = w;
          if (w != moved.translate) c.expect(!in_flag_cell(b.flag, other));
        }
      }
    }
  });

  s.numeric("one_cell_closed_forms", 1e-12, [&](Check& c) {
    // e1_2 carries the displayed sign; e1_1 and e1_3 run along -u_beta and -u_alpha.
    const std::array<std::pair<int, SkewMatrix>, 3> forms{
        {{1, -1.0 * u_beta()}, {2, u_alpha_beta()}, {3, -1.0 * u_alpha()}}};
    for (std::size_t n = 0; n < std::min<std::size_t>(c.n(), 1000); ++n) {
      const double t = c.rng().uniform(1e-6, 1.0 - 1e-6);
      for (const auto& [index, u] : forms) {
        const FlagPoint a = flag_cell_point({1, index}, t, 0.0);
        const FlagPoint b(exp_skew((t * kPi / 2) * u));
        c.observe(flag_gap(a, b), [&, index = index] { return Json{{"inputs", {index, t}}}; });
      }
    }
  });

  s.numeric("one_cell_minimal_geodesics", 1e-12, [&](Check& c) {
    const std::array<WeylElement, 3> ends{WeylElement::s_beta(), WeylElement::w0(), WeylElement::s_alpha()};
    const std::array<ExactQuat, 3> taus{tau_i(), tau_j(), tau_k()};
    for (std::size_t u = 0; u < 3; ++u) {
      const Quat q = to_numeric(taus[u]).conj();
      const FlagPoint end = basepoint() * ends[u];
      c.observe(flag_gap(flag_geodesic(q, 1.0), end), [&] { return Json{{"inputs", u + 1}}; });
      c.observe(std::abs(arc_length(x_q(q), 1.0) - kPi / 4));
      c.observe(std::abs(flag_distance(basepoint(), end) - kPi / 4));
      for (std::size_t n = 0; n < 100; ++n) {
        const double t = c.rng().uniform();
        c.observe(std::abs(arc_length(x_q(q), t) - t * kPi / 4), [&] { return Json{{"inputs", {u + 1, t}}}; });
        c.observe(std::abs(flag_distance(basepoint(), flag_geodesic(q, t)) - t * kPi / 4));
      }
    }
  });

  s.numeric("two_cell_closed_form_grid", 1e-9, [&](Check& c) {
    const std::array<std::pair<Axis, Axis>, 3> pairs{{{Axis::i, Axis::j}, {Axis::j, Axis::k}, {Axis::k, Axis::i}}};
    std::size_t outside = 0;
    for (const auto& [u, v] : pairs) {
      for (int a = 0; a < 20; ++a) {
        for (int b = 0; b < 20; ++b) {
          const double sp = (a + 0.5) / 20.0, tp = (b + 0.5) / 20.0;
          const FlagPoint closed = param_cell_closed_form(u, v, sp, tp);
          c.observe(flag_gap(closed, param_cell_gamma_form(u, v, sp, tp)),
                    [&] { return Json{{"inputs", {std::string{axis_name(u), axis_name(v)}, sp, tp}}}; });
          if (!in_flag_cell(closed, closed_form_cell(u, v))) ++outside;
        }
      }
    }
    c.observe(static_cast<double>(outside), [&] { return Json{{"inputs", "membership"}, {"got", outside}}; });
  });

  s.numeric("two_cell_t_limit", 1e-7, [&](Check& c) {
    const SkewMatrix limit = x_q(to_numeric(omega_i()).conj());
    const SkewMatrix x = closed_form_generator(Axis::i, Axis::j, 1e-9);
    c.observe(max_abs_diff(x.matrix(), limit.matrix()), [&] { return Json{{"expected", to_json(limit)}, {"got", to_json(x)}}; });
  });

  s.exact("weyl_fundamental_domain", [&](Check& c) {
    const WeylDomainReport r = weyl_fundamental_domain_check(std::min<std::size_t>(c.n(), 2000), c.seed());
    Json hits = Json::object();
    for (const auto& [k, v] : r.translate_hits) hits[std::to_string(k)] = v;
    c.expect(r.failures == 0, [&] { return Json{{"got", {{"failures", r.failures}, {"translate_hits", hits}}}}; });
    s.results()["weyl_domain"] = Json{{"n", r.n}, {"failures", r.failures}, {"translate_hits", hits}};
  });

  s.exact("invalid_ids_rejected", [&](Check& c) {
    for (const CellId& id : {CellId{4, 1, 0}, CellId{1, 4, 0}, CellId{3, 2, 0}, CellId{1, 1, 48}}) {
      bool threw = false;
      try {
        validate(id, CellLevel::sphere);
      } catch (const DomainError&) {
        threw = true;
      }
      c.expect(threw, [&] { return Json{{"inputs", {id.dim, id.index, id.translate}}}; });
    }
  });

  return s.finish();
}

}  // namespace octaflag
