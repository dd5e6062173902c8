#include "octaflag/cells/cell.hpp"
#include "octaflag/cells/closed_form.hpp"
#include "octaflag/cells/export.hpp"
#include "octaflag/cells/fundamental_domain.hpp"
#include "octaflag/cells/join.hpp"
#include "octaflag/cells/partition.hpp"
#include "octaflag/error.hpp"
#include "octaflag/flag/distance.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/rot/so3.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <sstream>

using namespace octaflag;
using namespace octaflag::elements;

namespace {

std::size_t open_cells_containing(const Quat& x) {
  std::size_t hits = 0;
  for (std::size_t g = 0; g < binary_octahedral_group().size(); ++g) {
    for (CellId id : representative_cells()) {
      id.translate = g;
      hits += in_sphere_cell(x, id) ? 1 : 0;
    }
  }
  return hits;
}

Quat midpoint(const ExactQuat& a, const ExactQuat& b) { return project_sphere(to_numeric(a) + to_numeric(b)); }

}  // namespace

TEST(Join, VerticesAndMidpoints) {
  const Quat ti = to_numeric(tau_i());
  const JoinSpec edge({Quat::identity(), ti}, Openness::closed);
  EXPECT_EQ(edge.dimension(), 1u);
  EXPECT_TRUE(join_membership(ti, edge));
  EXPECT_FALSE(join_membership(ti, edge.with_openness(Openness::open)));
  EXPECT_TRUE(join_membership(midpoint(one(), tau_i()), edge.with_openness(Openness::open)));
  EXPECT_FALSE(join_membership(to_numeric(tau_j()), edge));
}

TEST(Join, CoordinatesSolveTheRayEquation) {
  const auto& tet = inverted_octahedral_tetrahedra()[3];
  std::vector<Quat> v;
  for (const auto& q : tet.vertices) v.push_back(to_numeric(q));
  const JoinSpec j(v, Openness::open);
  const std::array<double, 4> lambda{0.1, 0.2, 0.3, 0.4};
  Quat x{0, 0, 0, 0};
  for (int n = 0; n < 4; ++n) x = x + lambda[n] * v[n];
  const JoinCoordinates c = j.coordinates(project_sphere(x));
  ASSERT_TRUE(c.in_span);
  for (int n = 0; n < 4; ++n) EXPECT_NEAR(c.lambda[n], lambda[n], 1e-12);
  EXPECT_NEAR(c.mu, norm(x), 1e-12);
}

TEST(Join, DegenerateSpecsRejected) {
  const Quat ti = to_numeric(tau_i());
  EXPECT_THROW(JoinSpec({Quat::identity()}, Openness::open), DomainError);
  EXPECT_THROW(JoinSpec({Quat::identity(), -Quat::identity()}, Openness::open), DomainError);
  EXPECT_THROW(JoinSpec({Quat::identity(), ti, midpoint(one(), tau_i())}, Openness::open), DomainError);
  EXPECT_THROW(JoinSpec({Quat::identity(), Quat{2.0, 0, 0, 0}}, Openness::open), DomainError);
}

TEST(FundamentalDomain, InvertedVertexTable) {
  const auto& d = inverted_octahedral_tetrahedra();
  EXPECT_EQ(d[0].label, "D1^");
  for (const auto& tet : d) {
    EXPECT_EQ(tet.vertices[0], one());
    for (const auto& v : tet.vertices) {
      EXPECT_TRUE(binary_octahedral_group().contains(v));
      EXPECT_GT(v.w, QSqrt2(0));
    }
  }
  for (std::size_t n = 0; n < 6; ++n)
    for (std::size_t m = 0; m < 4; ++m) EXPECT_EQ(d[n].vertices[m], octahedral_tetrahedra()[n].vertices[m].conj());
}

TEST(FundamentalDomain, IdentityAndVertices) {
  EXPECT_TRUE(in_fundamental_domain(Quat::identity()));
  EXPECT_TRUE(in_fundamental_domain(to_numeric(omega_0()).conj()));
  EXPECT_FALSE(in_fundamental_domain(-Quat::identity()));
}

TEST(CellId, LabelsRoundTrip) {
  for (const auto& id : representative_cells()) EXPECT_EQ(CellId::parse(id.label()), id);
  EXPECT_EQ(CellId::parse("e2_3", 4).translate, 4u);
  EXPECT_THROW(CellId::parse("e4"), DomainError);
  EXPECT_THROW(validate(CellId{2, 1, 6}, CellLevel::flag), DomainError);
  EXPECT_NO_THROW(validate(CellId{2, 1, 47}, CellLevel::sphere));
}

TEST(Cells, PieceStructure) {
  EXPECT_TRUE(cell_pieces({0, 1}).empty());
  EXPECT_EQ(cell_pieces({1, 2}).size(), 1u);
  EXPECT_EQ(cell_pieces({2, 1}).size(), 3u);
  const auto& e3 = cell_pieces({3, 1});
  ASSERT_EQ(e3.size(), 12u);
  std::size_t tets = 0;
  for (const auto& p : e3) tets += p.vertices().size() == 4 ? 1 : 0;
  EXPECT_EQ(tets, 6u);
}

TEST(Cells, OpenTetrahedronPointsHaveMultiplicityOne) {
  CounterRng rng(31);
  for (std::size_t tet = 0; tet < 6; ++tet) {
    for (int n = 0; n < 5; ++n) {
      const double s = rng.uniform(0.05, 0.95);
      const std::array<double, 3> face{rng.uniform(0.1, 1), rng.uniform(0.1, 1), rng.uniform(0.1, 1)};
      const double total = face[0] + face[1] + face[2];
      const Quat x = sphere_tetrahedron_point(tet, s, {face[0] / total, face[1] / total, face[2] / total});
      EXPECT_EQ(open_cells_containing(x), 1u) << "tetrahedron " << tet + 1;
      EXPECT_TRUE(in_sphere_cell(x, {3, 1}));
    }
  }
}

TEST(Cells, LowerCellPointsHaveMultiplicityOne) {
  CounterRng rng(32);
  for (const CellId& id : representative_cells()) {
    if (id.dim == 3) continue;
    const CellSample s = sample_cell(id, CellLevel::sphere, rng);
    EXPECT_EQ(open_cells_containing(s.sphere), 1u) << id.label();
  }
}

// The listed pieces of e3 leave out the open edge from 1 to omega_0^-1, shared
// by the first three tetrahedra. Its points lie in the closed domain but in no
// open cell.
TEST(Cells, OmittedInternalEdge) {
  const Quat x = midpoint(one(), omega_0().conj());
  EXPECT_TRUE(in_fundamental_domain(x));
  EXPECT_TRUE(in_sphere_cell(x, {3, 1}, Openness::closed));
  EXPECT_FALSE(in_sphere_cell(x, {3, 1}));
  EXPECT_EQ(open_cells_containing(x), 0u);
}

TEST(Cells, FlagSamplesLieInTheirTranslate) {
  CounterRng rng(33);
  for (const CellId& rep : representative_cells()) {
    for (std::size_t w = 0; w < 6; ++w) {
      const CellId id{rep.dim, rep.index, w};
      const CellSample s = sample_cell(id, CellLevel::flag, rng);
      EXPECT_TRUE(in_flag_cell(s.flag, id)) << id.label() << " w=" << w;
      EXPECT_TRUE(flag_eq(phi(s.sphere), s.flag, 1e-9));
    }
  }
}

TEST(Cells, FlagThreeCellTranslatesTile) {
  CounterRng rng(34);
  for (int n = 0; n < 300; ++n) {
    const FlagPoint f(covering_map(random_unit_quaternion(rng)));
    std::size_t hits = 0;
    for (std::size_t w = 0; w < 6; ++w) hits += in_flag_cell(f, {3, 1, w}) ? 1 : 0;
    EXPECT_EQ(hits, 1u);
  }
}

TEST(Cells, OneCellEndpoints) {
  const std::array<WeylElement, 3> ends{WeylElement::s_beta(), WeylElement::w0(), WeylElement::s_alpha()};
  for (int u = 1; u <= 3; ++u) {
    const FlagPoint near_end = flag_cell_point({1, u}, 1.0 - 1e-12, 0.0);
    EXPECT_LT(flag_distance(near_end, basepoint() * ends[u - 1]), 1e-11);
    EXPECT_NEAR(flag_distance(basepoint(), basepoint() * ends[u - 1]), std::numbers::pi / 4, 1e-12);
  }
  EXPECT_THROW(flag_cell_point({1, 1}, 1.0, 0.0), DomainError);
}

TEST(ClosedForm, MatchesGammaConstruction) {
  for (auto [u, v] : {std::pair{Axis::i, Axis::j}, {Axis::j, Axis::k}, {Axis::k, Axis::i}}) {
    for (double s : {0.1, 0.5, 0.9}) {
      for (double t : {0.05, 0.5, 0.95}) {
        const FlagPoint a = param_cell_closed_form(u, v, s, t), b = param_cell_gamma_form(u, v, s, t);
        EXPECT_LT(flag_distance(a, b), 1e-9);
        EXPECT_TRUE(in_flag_cell(a, closed_form_cell(u, v)));
      }
    }
  }
}

TEST(ClosedForm, DomainErrors) {
  EXPECT_THROW(closed_form_generator(Axis::j, Axis::i, 0.5), DomainError);
  EXPECT_THROW(closed_form_generator(Axis::i, Axis::j, 1.0), DomainError);
  EXPECT_THROW(param_cell_closed_form(Axis::i, Axis::j, 0.0, 0.5), DomainError);
  EXPECT_THROW(parse_axis('x'), DomainError);
  EXPECT_EQ(parse_axis('k'), Axis::k);
}

TEST(Partition, SmallRunIsClean) {
  const CoveringReport r = covering_and_partition_check(500, 3);
  EXPECT_EQ(r.coverage_failures, 0u);
  EXPECT_EQ(r.partition_failures, 0u);
  EXPECT_EQ(r.partition_checked + r.boundary_band_points, 500u);
  EXPECT_EQ(r.multiplicity.at(1), r.partition_checked);
  EXPECT_GT(r.worst_coverage_margin, -1e-9);
}

TEST(Partition, ResultIndependentOfWorkers) {
  CoveringOptions one_worker;
  one_worker.workers = 1;
  CoveringOptions many;
  many.workers = 4;
  const CoveringReport a = covering_and_partition_check(300, 9, one_worker), b = covering_and_partition_check(300, 9, many);
  EXPECT_EQ(a.multiplicity, b.multiplicity);
  EXPECT_EQ(a.boundary_band_points, b.boundary_band_points);
  EXPECT_EQ(a.worst_coverage_margin, b.worst_coverage_margin);
}

TEST(Partition, WeylDomain) {
  const WeylDomainReport r = weyl_fundamental_domain_check(300, 5);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(euler_characteristic(sphere_cell_counts()), 0);
}

TEST(Export, CsvLayout) {
  CounterRng rng(41);
  std::vector<CellSample> samples{sample_cell({2, 1, 3}, CellLevel::sphere, rng)};
  std::ostringstream sphere, flag;
  write_samples_csv(sphere, samples, CellLevel::sphere);
  EXPECT_EQ(sphere.str().substr(0, sphere.str().find('\n')), "cell,dim,translate,param_s,param_t,w,x,y,z");
  EXPECT_EQ(sphere.str().substr(sphere.str().find('\n') + 1, 9), "e2_1,2,3,");
  write_samples_csv(flag, samples, CellLevel::flag);
  EXPECT_EQ(flag.str().substr(0, flag.str().find('\n')),
            "cell,dim,translate,param_s,param_t,r11,r12,r13,r21,r22,r23,r31,r32,r33");
}

TEST(Export, PlyHeader) {
  CounterRng rng(42);
  std::vector<CellSample> samples{sample_cell({3, 1}, CellLevel::flag, rng), sample_cell({3, 1}, CellLevel::flag, rng)};
  std::ostringstream os;
  write_samples_ply(os, samples, CellLevel::flag);
  const std::string text = os.str();
  EXPECT_EQ(text.rfind("ply\nformat ascii 1.0\nelement vertex 2\n", 0), 0u);
  EXPECT_NE(text.find("property double r33\nend_header\n"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3 + 4 + 9 + 1 + 2);
}
