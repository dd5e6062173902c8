#pragma once

#include "octaflag/cells/join.hpp"
#include "octaflag/quat/quaternion.hpp"

#include <array>
#include <string>
#include <vector>

namespace octaflag {

struct Tetrahedron {
  std::string label;
  std::array<ExactQuat, 4> vertices;
};

/// Delta_1 .. Delta_6, whose projections tile a fundamental domain for O
/// acting on S^3 on the left:
///   [1, ti, tj, w0], [1, tj, tk, w0], [1, tk, ti, w0],
///   [1, ti, wk, tj], [1, tj, wi, tk], [1, ti, wj, tk].
const std::array<Tetrahedron, 6>& octahedral_tetrahedra();

/// The same tetrahedra with every vertex inverted; their projections tile a
/// fundamental domain for O acting on the right.
const std::array<Tetrahedron, 6>& inverted_octahedral_tetrahedra();

/// Numeric joins of the inverted tetrahedra.
std::vector<JoinSpec> fundamental_domain_octahedral(Openness openness = Openness::closed);

/// x lies in the closed inverted fundamental domain.
bool in_fundamental_domain(const Quat& x, const MembershipTolerance& tol = {});

}  // namespace octaflag
