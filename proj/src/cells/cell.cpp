#include "octaflag/cells/cell.hpp"

#include "octaflag/cells/fundamental_domain.hpp"
#include "octaflag/error.hpp"
#include "octaflag/flag/geodesic.hpp"
#include "octaflag/quat/finite_group.hpp"
#include "octaflag/quat/sphere.hpp"
#include "octaflag/rot/so3.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>

namespace octaflag {

namespace {

using Path = std::array<ExactQuat, 3>;

Path broken_path(int index) {
  using namespace elements;
  switch (index) {
    case 1: return {tau_i(), omega_k(), tau_j()};
    case 2: return {tau_j(), omega_i(), tau_k()};
    default: return {tau_k(), omega_j(), tau_i()};
  }
}

ExactQuat one_cell_end(int index) {
  using namespace elements;
  switch (index) {
    case 1: return tau_i();
    case 2: return tau_j();
    default: return tau_k();
  }
}

std::vector<std::vector<ExactQuat>> three_cell_pieces() {
  using namespace elements;
  const auto o = one();
  const auto ti = tau_i(), tj = tau_j(), tk = tau_k();
  const auto w0 = omega_0(), wi = omega_i(), wj = omega_j(), wk = omega_k();
  return {
      {wi, o, tj, tk}, {o, tj, tk},     {o, tj, tk, w0}, {o, tk, w0},
      {o, tk, w0, ti}, {o, tk, ti},     {o, tk, ti, wj}, {o, ti, w0},
      {o, ti, w0, tj}, {o, ti, tj},     {o, ti, tj, wk}, {o, tj, w0},
  };
}

const std::vector<Quat>& octahedral_numeric() {
  static const auto table = [] {
    std::vector<Quat> v;
    for (const auto& g : binary_octahedral_group().elements()) v.push_back(to_numeric(g));
    return v;
  }();
  return table;
}

const std::vector<Quat>& quaternion_group_numeric() {
  static const auto table = [] {
    std::vector<Quat> v;
    for (const auto& g : quaternion_group().elements()) v.push_back(to_numeric(g));
    return v;
  }();
  return table;
}

// Lifts in O of each Weyl element, grouped by index.
const std::array<std::vector<std::size_t>, WeylElement::kOrder>& weyl_fibers() {
  static const auto table = [] {
    std::array<std::vector<std::size_t>, WeylElement::kOrder> f;
    const auto& o = binary_octahedral_group();
    for (std::size_t n = 0; n < o.size(); ++n) {
      f[octahedral_coset_label(o.element(n)).index()].push_back(n);
    }
    return f;
  }();
  return table;
}

double open_unit(CounterRng& rng) {
  for (;;) {
    const double u = rng.uniform();
    if (u > 0.0) return u;
  }
}

std::array<double, 3> random_barycentric(CounterRng& rng) {
  std::array<double, 3> e{};
  double sum = 0.0;
  for (double& x : e) {
    x = -std::log(open_unit(rng));
    sum += x;
  }
  for (double& x : e) x /= sum;
  return e;
}

void require_open_parameter(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string("cell parameter ") + name + " must lie in (0, 1)");
  }
}

// Point of the broken path a - w - b at t, the corner w at t = 1/2.
Quat path_point(const Path& p, double t) {
  const Quat a = to_numeric(p[0]), w = to_numeric(p[1]), b = to_numeric(p[2]);
  return t <= 0.5 ? slerp(a, w, 2.0 * t) : slerp(w, b, 2.0 * t - 1.0);
}

// Far-boundary point q of the inverted representative, so that the cell is the
// union of the open geodesics from 1 to q.
Quat far_point(const CellId& id, double t) {
  if (id.dim == 1) return to_numeric(one_cell_end(id.index)).conj();
  return path_point(broken_path(id.index), t).conj();
}

Quat face_point(std::size_t tet, const std::array<double, 3>& face) {
  if (tet >= 6) throw DomainError("tetrahedron number out of range");
  const auto& v = inverted_octahedral_tetrahedra()[tet].vertices;
  Quat sum{0.0, 0.0, 0.0, 0.0};
  for (std::size_t n = 0; n < 3; ++n) {
    if (!(face[n] > 0.0)) throw DomainError("face coordinates must be positive");
    sum = sum + face[n] * to_numeric(v[n + 1]);
  }
  return project_sphere(sum);
}

}  // namespace

std::string CellId::label() const {
  if (dim == 0 || dim == 3) return "e" + std::to_string(dim);
  return "e" + std::to_string(dim) + "_" + std::to_string(index);
}

CellId CellId::parse(std::string_view label, std::size_t translate) {
  for (const auto& id : representative_cells()) {
    if (id.label() == label) return CellId{id.dim, id.index, translate};
  }
  throw DomainError("unknown cell label: " + std::string(label));
}

void validate(const CellId& id, CellLevel level) {
  if (id.dim < 0 || id.dim > 3) throw DomainError("cell dimension must be 0..3");
  const int max_index = (id.dim == 1 || id.dim == 2) ? 3 : 1;
  if (id.index < 1 || id.index > max_index) throw DomainError("cell index out of range");
  const std::size_t order = level == CellLevel::sphere ? binary_octahedral_group().size()
                                                       : static_cast<std::size_t>(WeylElement::kOrder);
  if (id.translate >= order) throw DomainError("cell translate out of range");
}

const std::vector<CellId>& representative_cells() {
  static const std::vector<CellId> cells = {{0, 1}, {1, 1}, {1, 2}, {1, 3},
                                            {2, 1}, {2, 2}, {2, 3}, {3, 1}};
  return cells;
}

std::array<std::size_t, 4> representative_counts() {
  std::array<std::size_t, 4> c{};
  for (const auto& id : representative_cells()) ++c[static_cast<std::size_t>(id.dim)];
  return c;
}

std::vector<std::vector<ExactQuat>> cell_piece_vertices(const CellId& id) {
  validate(id, CellLevel::sphere);
  std::vector<std::vector<ExactQuat>> pieces;
  const auto o = elements::one();
  switch (id.dim) {
    case 0:
      break;
    case 1:
      pieces.push_back({o, one_cell_end(id.index)});
      break;
    case 2: {
      const Path p = broken_path(id.index);
      pieces = {{o, p[0], p[1]}, {o, p[1]}, {o, p[1], p[2]}};
      break;
    }
    default:
      pieces = three_cell_pieces();
  }
  for (auto& piece : pieces) {
    for (auto& v : piece) v = v.conj();
  }
  return pieces;
}

const std::vector<JoinSpec>& cell_pieces(const CellId& id) {
  validate(id, CellLevel::sphere);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<JoinSpec>> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_pair(id.dim, id.index);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<JoinSpec> joins;
    for (const auto& piece : cell_piece_vertices(id)) {
      std::vector<Quat> v;
      for (const auto& q : piece) v.push_back(to_numeric(q));
      joins.emplace_back(std::move(v), Openness::open);
    }
    it = cache.emplace(key, std::move(joins)).first;
  }
  return it->second;
}

namespace {

bool in_representative(const Quat& y, const CellId& id, const std::vector<JoinSpec>& pieces,
                       Openness openness, const MembershipTolerance& tol) {
  if (id.dim == 0) return max_abs_diff(y, Quat::identity()) <= tol.span;
  for (const auto& j : pieces) {
    if (join_membership(y, j, openness, tol)) return true;
  }
  return false;
}

}  // namespace

bool in_sphere_cell(const Quat& x, const CellId& id, Openness openness,
                    const MembershipTolerance& tol) {
  validate(id, CellLevel::sphere);
  const auto& pieces = cell_pieces(id);
  const Quat g_inv = octahedral_numeric()[id.translate].conj();
  return in_representative(x * g_inv, id, pieces, openness, tol);
}

std::array<Quat, 8> flag_lifts(const FlagPoint& f) {
  const Quat q0 = quaternion_from_rotation(f.representative());
  std::array<Quat, 8> out;
  const auto& q8 = quaternion_group_numeric();
  for (std::size_t n = 0; n < 8; ++n) out[n] = q0 * q8[n];
  return out;
}

bool in_flag_cell(const FlagPoint& f, const CellId& id, Openness openness,
                  const MembershipTolerance& tol) {
  validate(id, CellLevel::flag);
  const auto& pieces = cell_pieces(id);
  const Quat q0 = quaternion_from_rotation(f.representative());
  // f w^-1 = phi(q0 g) for any lift g of w^-1; the 8 such g give all lifts.
  const WeylElement w_inv = WeylElement::from_index(id.translate).inverse();
  for (std::size_t g : weyl_fibers()[w_inv.index()]) {
    if (in_representative(q0 * octahedral_numeric()[g], id, pieces, openness, tol)) return true;
  }
  return false;
}

Quat sphere_cell_point(const CellId& id, double s, double t) {
  validate(id, CellLevel::sphere);
  if (id.dim == 3) throw DomainError("3-cell points are addressed by tetrahedron");
  if (id.dim == 0) return Quat::identity();
  require_open_parameter(s, "s");
  if (id.dim == 2) require_open_parameter(t, "t");
  return round_geodesic(far_point(id, t), s);
}

Quat sphere_tetrahedron_point(std::size_t tet, double s, const std::array<double, 3>& face) {
  require_open_parameter(s, "s");
  return round_geodesic(face_point(tet, face), s);
}

FlagPoint flag_cell_point(const CellId& id, double s, double t) {
  validate(id, CellLevel::flag);
  if (id.dim == 3) throw DomainError("3-cell points are addressed by tetrahedron");
  if (id.dim == 0) return basepoint();
  require_open_parameter(s, "s");
  if (id.dim == 2) require_open_parameter(t, "t");
  return flag_geodesic(far_point(id, t), s);
}

FlagPoint flag_tetrahedron_point(std::size_t tet, double s, const std::array<double, 3>& face) {
  require_open_parameter(s, "s");
  return flag_geodesic(face_point(tet, face), s);
}

CellSample sample_cell(const CellId& id, CellLevel level, CounterRng& rng) {
  validate(id, level);
  CellSample out;
  out.cell = id;
  const CellId rep{id.dim, id.index, 0};
  std::array<double, 3> face{};
  std::size_t tet = 0;
  if (id.dim >= 1) out.s = open_unit(rng);
  if (id.dim == 2) out.t = open_unit(rng);
  if (id.dim == 3) {
    tet = static_cast<std::size_t>(rng.next_u64() % 6);
    face = random_barycentric(rng);
    out.t = static_cast<double>(tet + 1);
  }
  const Quat base = id.dim == 3 ? sphere_tetrahedron_point(tet, out.s, face)
                                : sphere_cell_point(rep, out.s, out.t);
  if (level == CellLevel::sphere) {
    out.sphere = base * octahedral_numeric()[id.translate];
    out.flag = phi(out.sphere);
    return out;
  }
  const WeylElement w = WeylElement::from_index(id.translate);
  const FlagPoint f = id.dim == 3 ? flag_tetrahedron_point(tet, out.s, face)
                                  : flag_cell_point(rep, out.s, out.t);
  out.flag = f * w;
  out.sphere = base * octahedral_numeric()[weyl_fibers()[w.index()].front()];
  return out;
}

}  // namespace octaflag
