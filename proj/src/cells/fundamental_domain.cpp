#include "octaflag/cells/fundamental_domain.hpp"

namespace octaflag {

namespace {

std::array<Tetrahedron, 6> make_tetrahedra() {
  using namespace elements;
  return {{
      {"D1", {one(), tau_i(), tau_j(), omega_0()}},
      {"D2", {one(), tau_j(), tau_k(), omega_0()}},
      {"D3", {one(), tau_k(), tau_i(), omega_0()}},
      {"D4", {one(), tau_i(), omega_k(), tau_j()}},
      {"D5", {one(), tau_j(), omega_i(), tau_k()}},
      {"D6", {one(), tau_i(), omega_j(), tau_k()}},
  }};
}

}  // namespace

const std::array<Tetrahedron, 6>& octahedral_tetrahedra() {
  static const auto table = make_tetrahedra();
  return table;
}

const std::array<Tetrahedron, 6>& inverted_octahedral_tetrahedra() {
  static const auto table = [] {
    auto t = make_tetrahedra();
    for (auto& tet : t) {
      tet.label += "^";
      for (auto& v : tet.vertices) v = v.conj();
    }
    return t;
  }();
  return table;
}

std::vector<JoinSpec> fundamental_domain_octahedral(Openness openness) {
  std::vector<JoinSpec> out;
  for (const auto& tet : inverted_octahedral_tetrahedra()) {
    std::vector<Quat> v;
    for (const auto& q : tet.vertices) v.push_back(to_numeric(q));
    out.emplace_back(std::move(v), openness);
  }
  return out;
}

bool in_fundamental_domain(const Quat& x, const MembershipTolerance& tol) {
  static const auto domain = fundamental_domain_octahedral(Openness::closed);
  for (const auto& j : domain) {
    if (join_membership(x, j, tol)) return true;
  }
  return false;
}

}  // namespace octaflag
