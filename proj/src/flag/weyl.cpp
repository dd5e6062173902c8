#include "octaflag/flag/weyl.hpp"

#include "octaflag/error.hpp"

namespace octaflag {

const std::array<WeylElement, WeylElement::kOrder>& WeylElement::all() {
  static const std::array<WeylElement, kOrder> elements = {
      identity(), s_alpha(), s_beta(), s_alpha() * s_beta(), s_beta() * s_alpha(), w0()};
  return elements;
}

WeylElement WeylElement::from_index(std::size_t n) {
  if (n >= kOrder) throw DomainError("WeylElement: index out of range");
  return all()[n];
}

WeylElement WeylElement::from_permutation(const std::array<int, 3>& image) {
  std::array<bool, 3> seen{};
  std::array<std::uint8_t, 3> p{};
  for (std::size_t j = 0; j < 3; ++j) {
    if (image[j] < 0 || image[j] > 2 || seen[image[j]]) {
      throw DomainError("WeylElement: not a permutation of three axes");
    }
    seen[image[j]] = true;
    p[j] = static_cast<std::uint8_t>(image[j]);
  }
  return WeylElement(p);
}

std::size_t WeylElement::index() const {
  const auto& e = all();
  for (std::size_t n = 0; n < kOrder; ++n) {
    if (e[n] == *this) return n;
  }
  return kOrder;  // unreachable: every permutation of three axes is listed
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  for (std::uint8_t j = 0; j < 3; ++j) r.image_[image_[j]] = j;
  return r;
}

std::vector<SimpleReflection> WeylElement::reduced_word() const {
  using S = SimpleReflection;
  switch (index()) {
    case 0: return {};
    case 1: return {S::alpha};
    case 2: return {S::beta};
    case 3: return {S::alpha, S::beta};
    case 4: return {S::beta, S::alpha};
    default: return {S::alpha, S::beta, S::alpha};
  }
}

std::string WeylElement::name() const {
  static const std::array<const char*, kOrder> names = {"1",       "s_a",     "s_b",
                                                        "s_a s_b", "s_b s_a", "w0"};
  return names[index()];
}

}  // namespace octaflag
