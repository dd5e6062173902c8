#pragma once

#include "octaflag/cells/join.hpp"
#include "octaflag/flag/flag_point.hpp"
#include "octaflag/quat/quaternion.hpp"
#include "octaflag/random.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace octaflag {

/// S^3 level: cells of the right O-action, translates indexed in O.
/// Flag level: cells of the right S3-action on F(R), translates indexed in W.
enum class CellLevel { sphere, flag };

/// Representative e^0, e^1_1..3, e^2_1..3 or e^3 (index 1 for dimensions 0
/// and 3), moved by the group element with the given index.
struct CellId {
  int dim = 0;
  int index = 1;
  std::size_t translate = 0;

  /// "e0", "e1_2", "e3", ...
  std::string label() const;
  /// Inverse of label(). Throws DomainError on anything else.
  static CellId parse(std::string_view label, std::size_t translate = 0);

  bool operator==(const CellId&) const = default;
};

/// Throws DomainError for an invalid dimension, index or translate.
void validate(const CellId& id, CellLevel level);

/// The eight representatives in the order e0, e1_1, e1_2, e1_3, e2_1, e2_2, e2_3, e3.
const std::vector<CellId>& representative_cells();

/// Number of representatives of each dimension: (1, 3, 3, 1).
std::array<std::size_t, 4> representative_counts();

/// Open cell pieces of the (untranslated) inverted S^3 representative, as
/// exact vertex lists. The 0-cell has no pieces.
///   e1_u: 1 * u^-1
///   e2_n: 1 * a^-1 * w^-1, 1 * w^-1 and 1 * w^-1 * b^-1 for the broken path
///         (a, w, b) = (ti, wk, tj), (tj, wi, tk), (tk, wj, ti)
///   e3:   six tetrahedra and six internal walls, all containing 1
std::vector<std::vector<ExactQuat>> cell_piece_vertices(const CellId& id);

/// Numeric joins for cell_piece_vertices, cached per representative.
const std::vector<JoinSpec>& cell_pieces(const CellId& id);

/// x lies in (the closure of, for Openness::closed) the S^3 cell e^ * g.
bool in_sphere_cell(const Quat& x, const CellId& id, Openness openness = Openness::open,
                    const MembershipTolerance& tol = {});

/// The 8 points of S^3 over a flag point.
std::array<Quat, 8> flag_lifts(const FlagPoint& f);

/// f lies in (the closure of) the flag cell e * w: some lift of f w^-1 lies
/// in the inverted S^3 representative.
bool in_flag_cell(const FlagPoint& f, const CellId& id, Openness openness = Openness::open,
                  const MembershipTolerance& tol = {});

/// Sample coordinates. s is the radial parameter along the geodesic from the
/// basepoint; t runs along the far boundary of a 2-cell (the broken path, with
/// the corner at t = 1/2) and is the tetrahedron number 1..6 for a 3-cell.
struct CellSample {
  CellId cell;
  double s = 0.0;
  double t = 0.0;
  Quat sphere;      // point of e^ * g (translate taken in O)
  FlagPoint flag;   // point of e * w (translate taken in W)
};

/// Deterministic point of the S^3 representative (no translate) for dims 0..2.
Quat sphere_cell_point(const CellId& id, double s, double t);
/// Point of the open inverted tetrahedron `tet` (0-based): radial parameter s
/// toward the face point with barycentric coordinates `face`.
Quat sphere_tetrahedron_point(std::size_t tet, double s, const std::array<double, 3>& face);

/// Flag-level counterparts built from the geodesic images Gamma_q.
FlagPoint flag_cell_point(const CellId& id, double s, double t);
FlagPoint flag_tetrahedron_point(std::size_t tet, double s, const std::array<double, 3>& face);

/// Random sample at the requested level; the translate of `id` is read in O
/// (sphere) or W (flag). At the sphere level flag = phi(sphere). At the flag
/// level flag comes from the Gamma construction and sphere from the first
/// lift of the translate in O, so phi(sphere) = flag again but independently.
CellSample sample_cell(const CellId& id, CellLevel level, CounterRng& rng);

}  // namespace octaflag
