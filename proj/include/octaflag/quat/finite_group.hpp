#pragma once

#include "octaflag/flag/weyl.hpp"
#include "octaflag/quat/quaternion.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace octaflag {

/// A finite subgroup of S^3 with exact elements in deterministic BFS order.
///
/// Element 0 is always 1. Multiplication and inversion are tabulated on
/// construction, so group-ring code can work with indices only.
class FiniteSubgroup {
 public:
  FiniteSubgroup(std::string name, std::vector<ExactQuat> elements);

  const std::string& name() const { return name_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ExactQuat>& elements() const { return elements_; }
  const ExactQuat& element(std::size_t n) const { return elements_.at(n); }

  std::optional<std::size_t> index_of(const ExactQuat& q) const;
  bool contains(const ExactQuat& q) const { return index_of(q).has_value(); }
  /// Index of q; throws DomainError if q is not an element.
  std::size_t require_index(const ExactQuat& q) const;

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity_index() const { return 0; }

 private:
  std::string name_;
  std::vector<ExactQuat> elements_;
  std::map<ExactQuat, std::size_t, ExactQuatLess> index_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

inline constexpr std::size_t kDefaultGroupBound = 1000;

/// Closure of the generators under multiplication, by breadth-first search
/// multiplying on the right by each generator in the given order.
///
/// Generators must satisfy N(g) = 1 exactly. Throws DomainError with
/// "not finite within bound" if more than `bound` elements appear.
FiniteSubgroup generate_subgroup(std::span<const ExactQuat> generators,
                                 std::size_t bound = kDefaultGroupBound,
                                 std::string name = "generated");

/// Q8 = <i, j>.
const FiniteSubgroup& quaternion_group();
/// Binary octahedral group O = <tau_i, tau_j>, order 48.
const FiniteSubgroup& binary_octahedral_group();

/// The projection O -> O/Q8 = S_3.
///
/// g acts on the pure quaternions by conjugation and, because g normalizes
/// Q8, permutes the three lines R i, R j, R k; the label is that permutation.
/// This agrees with the permutation underlying the signed permutation matrix
/// B(g). Throws DomainError if g is not in O.
WeylElement octahedral_coset_label(const ExactQuat& g);

}  // namespace octaflag
