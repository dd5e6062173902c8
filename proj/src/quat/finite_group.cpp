#include "octaflag/quat/finite_group.hpp"

#include <deque>
#include <sstream>

namespace octaflag {

FiniteSubgroup::FiniteSubgroup(std::string name, std::vector<ExactQuat> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  for (std::size_t n = 0; n < elements_.size(); ++n) index_.emplace(elements_[n], n);
  const std::size_t m = elements_.size();
  table_.resize(m * m);
  inverse_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      table_[a * m + b] = require_index(elements_[a] * elements_[b]);
    }
    inverse_[a] = require_index(elements_[a].conj());
  }
}

std::optional<std::size_t> FiniteSubgroup::index_of(const ExactQuat& q) const {
  auto it = index_.find(q);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteSubgroup::require_index(const ExactQuat& q) const {
  auto n = index_of(q);
  if (!n) {
    std::ostringstream os;
    os << q << " is not an element of " << name_;
    throw DomainError(os.str());
  }
  return *n;
}

FiniteSubgroup generate_subgroup(std::span<const ExactQuat> generators, std::size_t bound,
                                 std::string name) {
  for (const auto& g : generators) {
    if (g.norm2() != QSqrt2(1)) throw DomainError("generate_subgroup: generator is not a unit");
  }
  std::vector<ExactQuat> elements{ExactQuat::identity()};
  std::map<ExactQuat, std::size_t, ExactQuatLess> seen{{elements.front(), 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    ExactQuat current = elements[queue.front()];
    queue.pop_front();
    for (const auto& g : generators) {
      ExactQuat next = current * g;
      if (seen.count(next)) continue;
      if (elements.size() >= bound) throw DomainError("generate_subgroup: not finite within bound");
      seen.emplace(next, elements.size());
      queue.push_back(elements.size());
      elements.push_back(std::move(next));
    }
  }
  return FiniteSubgroup(std::move(name), std::move(elements));
}

const FiniteSubgroup& quaternion_group() {
  static const FiniteSubgroup group = [] {
    const std::vector<ExactQuat> gens{elements::i(), elements::j()};
    return generate_subgroup(gens, kDefaultGroupBound, "Q8");
  }();
  return group;
}

const FiniteSubgroup& binary_octahedral_group() {
  static const FiniteSubgroup group = [] {
    const std::vector<ExactQuat> gens{elements::tau_i(), elements::tau_j()};
    return generate_subgroup(gens, kDefaultGroupBound, "O");
  }();
  return group;
}

WeylElement octahedral_coset_label(const ExactQuat& g) {
  binary_octahedral_group().require_index(g);
  const ExactQuat axes[3] = {elements::i(), elements::j(), elements::k()};
  std::array<int, 3> image{};
  const ExactQuat g_inv = g.conj();
  for (int a = 0; a < 3; ++a) {
    ExactQuat c = g * axes[a] * g_inv;
    const auto v = c.coords();
    image[a] = -1;
    for (int b = 0; b < 3; ++b) {
      if (!v[b + 1].is_zero()) image[a] = b;
    }
  }
  return WeylElement::from_permutation(image);
}

}  // namespace octaflag
