#include "octaflag/cli/verify.hpp"

#include "octaflag/homology/chain_complex.hpp"
#include "octaflag/homology/group_ring.hpp"
#include "octaflag/homology/int_matrix.hpp"
#include "octaflag/flag/weyl.hpp"
#include "octaflag/quat/finite_group.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace octaflag {

namespace {

using Rational = boost::multiprecision::cpp_rational;

AbelianGroup free_group(std::size_t rank, std::vector<Integer> torsion = {}) {
  return AbelianGroup{rank, std::move(torsion)};
}

// Rank over Q by Gaussian elimination on rationals.
std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Rational(m(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

GroupRingElement random_element(const GroupPtr& g, CounterRng& rng, int terms) {
  GroupRingElement e(g);
  for (int n = 0; n < terms; ++n) {
    const auto c = static_cast<long long>(rng.next_u64() % 7) - 3;
    e.add_term(static_cast<std::size_t>(rng.next_u64() % g->size()), c);
  }
  return e;
}

GroupRingMatrix random_matrix(const GroupPtr& g, std::size_t rows, std::size_t cols, CounterRng& rng) {
  GroupRingMatrix m(g, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(g, rng, 3);
  return m;
}

void scramble(IntMatrix& m, CounterRng& rng) {
  for (int n = 0; n < 40; ++n) {
    const bool rows = rng.next_u64() % 2 == 0;
    const std::size_t size = rows ? m.rows() : m.cols();
    if (size < 2) continue;
    const std::size_t a = rng.next_u64() % size;
    std::size_t b = rng.next_u64() % (size - 1);
    if (b >= a) ++b;
    const Integer f = static_cast<long long>(rng.next_u64() % 5) - 2;
    if (rng.next_u64() % 4 == 0) {
      rows ? m.swap_rows(a, b) : m.swap_cols(a, b);
    } else {
      rows ? m.add_row(a, b, f) : m.add_col(a, b, f);
    }
  }
}

}  // namespace

SuiteReport homology_suite(const VerifyOptions& options) {
  SuiteRunner s("homology", options);
  const Complexes k = build_complexes();
  const GroupPtr o = k.octahedral.group_ptr(), w = k.weyl.group_ptr();

  s.exact("complex_shapes", [&](Check& c) {
    c.expect(k.octahedral.ranks() == std::array<std::size_t, 4>{1, 3, 3, 1});
    c.expect(k.weyl.ranks() == std::array<std::size_t, 4>{1, 3, 3, 1});
    const auto& d1 = k.octahedral.boundary(1);
    const GroupRingElement unit = GroupRingElement::integer(o, 1);
    c.expect(d1.rows() == 3 && d1.cols() == 1);
    for (std::size_t r = 0; r < 3; ++r) {
      const std::string tau = std::string("tau_") + "ijk"[r];
      c.expect(d1(r, 0) == GroupRingElement::basis(o, o->index_of(tau)) - unit,
               [&] { return Json{{"inputs", r}, {"got", d1(r, 0).to_string()}}; });
    }
    const auto& d2 = k.weyl.boundary(2);
    c.expect(d2(0, 0) == GroupRingElement::basis(w, w->index_of("s_a s_b")));
    c.expect(d2(0, 1) == GroupRingElement::integer(w, 1));
    c.expect(d2(0, 2) == GroupRingElement::basis(w, w->index_of("w0")) - GroupRingElement::integer(w, 1));
  });

  s.exact("dd_zero", [&](Check& c) {
    c.expect(verify_dd_zero(k.octahedral) && verify_dd_zero(k.weyl));
    c.expect(compose_boundaries(k.octahedral, 1).is_zero() && compose_boundaries(k.octahedral, 2).is_zero());
    c.expect(compose_boundaries(k.weyl, 1).is_zero() && compose_boundaries(k.weyl, 2).is_zero());
  });

  s.exact("dd_mutation_detected", [&](Check& c) {
    for (const ChainComplex* base : {&k.octahedral, &k.weyl}) {
      GroupRingMatrix d2 = base->boundary(2);
      d2(0, 1) = -d2(0, 1);
      const ChainComplex bad(base->name() + "_mutated", base->side(), base->boundary(1), d2, base->boundary(3));
      c.expect(!verify_dd_zero(bad), [&] { return Json{{"inputs", bad.name()}}; });
      bool threw = false;
      try {
        homology(bad);
      } catch (const DomainError&) {
        threw = true;
      }
      c.expect(threw);
    }
  });

  s.exact("homology_sphere", [&](Check& c) {
    const auto h = homology(k.octahedral);
    const std::vector<AbelianGroup> want{free_group(1), free_group(0), free_group(0), free_group(1)};
    c.expect(h == want, [&] { return Json{{"expected", homology_json(want)}, {"got", homology_json(h)}}; });
    c.expect(euler_characteristic(h) == 0);
    s.results()["s3"] = homology_json(h);
  });

  s.exact("homology_flag", [&](Check& c) {
    const auto h = homology(k.weyl);
    const std::vector<AbelianGroup> want{free_group(1), free_group(0, {2, 2}), free_group(0), free_group(1)};
    c.expect(h == want, [&] { return Json{{"expected", homology_json(want)}, {"got", homology_json(h)}}; });
    c.expect(euler_characteristic(h) == 0);
    s.results()["flag"] = homology_json(h);
  });

  s.exact("homology_quotient", [&](Check& c) {
    const IntegerComplex q = tensor_trivial(k.weyl);
    c.expect(q.d[0].is_zero() && q.d[2].is_zero());
    const IntMatrix want_d2{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    const IntMatrix& d2 = q.d[1];
    c.expect(d2 == want_d2 || d2 == want_d2.transpose());
    const SmithForm snf = smith_normal_form(d2);
    c.expect(snf.invariants == std::vector<Integer>{1, 1, 2});
    const std::vector<AbelianGroup> want{free_group(1), free_group(0, {2}), free_group(0), free_group(1)};
    const auto h = homology(q);
    c.expect(h == want, [&] { return Json{{"expected", homology_json(want)}, {"got", homology_json(h)}}; });
    const auto h_o = homology(tensor_trivial(k.octahedral));
    c.expect(h_o == want, [&] { return Json{{"expected", homology_json(want)}, {"got", homology_json(h_o)}}; });
    c.expect(euler_characteristic(h) == 0);
    s.results()["quotient"] = homology_json(h);
  });

  s.exact("free_ranks_over_q", [&](Check& c) {
    for (const ChainComplex* cx : {&k.octahedral, &k.weyl}) {
      const IntegerComplex e = expand_complex(*cx);
      std::array<std::size_t, 4> rk{};
      for (int d = 0; d < 3; ++d) rk[d + 1] = rational_rank(e.d[d]);
      const auto h = homology(*cx);
      for (std::size_t d = 0; d < 4; ++d) {
        const std::size_t out = d < 3 ? rk[d + 1] : 0;
        const std::size_t betti = e.dims[d] - rk[d] - out;
        c.expect(h[d].rank == betti, [&] { return Json{{"inputs", {cx->name(), d}}, {"expected", betti}, {"got", h[d].rank}}; });
      }
    }
  });

  s.exact("group_ring_matches_quaternions", [&](Check& c) {
    const auto& q = binary_octahedral_group();
    c.expect(o->size() == q.size());
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t b = 0; b < q.size(); ++b) {
        const auto want = q.index_of(q.element(a) * q.element(b));
        const GroupRingElement prod = GroupRingElement::basis(o, a) * GroupRingElement::basis(o, b);
        c.expect(want && prod == GroupRingElement::basis(o, *want), [&] { return Json{{"inputs", {a, b}}}; });
      }
    }
    const auto all = WeylElement::all();
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b) c.expect(w->multiply(a, b) == (all[a] * all[b]).index());
  });

  s.exact("augmentation_multiplicative", [&](Check& c) {
    for (std::size_t n = 0; n < 1000; ++n) {
      const GroupRingElement a = random_element(o, c.rng(), 6), b = random_element(o, c.rng(), 6);
      c.expect((a * b).augmentation() == a.augmentation() * b.augmentation(),
               [&] { return Json{{"inputs", {a.to_string(), b.to_string()}}}; });
    }
  });

  s.exact("expansion_functorial", [&](Check& c) {
    for (const GroupPtr& g : {w, o}) {
      for (int n = 0; n < 5; ++n) {
        const GroupRingMatrix a = random_matrix(g, 2, 3, c.rng()), b = random_matrix(g, 3, 2, c.rng());
        const IntMatrix ab = expand_regular(a * b, Side::left_multiplication);
        c.expect(ab == expand_regular(a, Side::left_multiplication) * expand_regular(b, Side::left_multiplication));
        // x (a b) = (x a) b, so the column-acting expansions compose in reverse.
        const IntMatrix ab_right = expand_regular(a * b, Side::right_multiplication);
        c.expect(ab_right == expand_regular(b, Side::right_multiplication) * expand_regular(a, Side::right_multiplication));
      }
    }
  });

  s.exact("smith_form_unimodular_invariance", [&](Check& c) {
    std::vector<IntMatrix> mats{tensor_trivial(k.weyl).d[1], expand_complex(k.weyl).d[1], expand_complex(k.weyl).d[0]};
    for (const IntMatrix& m : mats) {
      const SmithForm base = smith_normal_form(m);
      for (int trial = 0; trial < 10; ++trial) {
        IntMatrix moved = m;
        scramble(moved, c.rng());
        c.expect(smith_normal_form(moved).invariants == base.invariants, [&] { return Json{{"inputs", trial}}; });
      }
    }
  });

  return s.finish();
}

}  // namespace octaflag
