#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace octaflag {

/// Simple reflection generators of the Weyl group of type A2.
enum class SimpleReflection : std::uint8_t { alpha, beta };

/// Element of the Weyl group W = S_3 = <s_alpha, s_beta>.
///
/// Stored as the permutation of the coordinate axes underlying a signed
/// permutation matrix in N(T): image[j] is the axis that column j of a
/// representative points along. s_alpha swaps axes 0 and 1 (it lifts to
/// [[0,-1,0],[1,0,0],[0,0,1]]), s_beta swaps axes 1 and 2. Composition
/// matches matrix multiplication of representatives.
class WeylElement {
 public:
  /// Fixed enumeration order, also the basis order of Z[S_3].
  static constexpr std::size_t kOrder = 6;

  WeylElement() : image_{0, 1, 2} {}

  static WeylElement identity() { return {}; }
  static WeylElement s_alpha() { return WeylElement({1, 0, 2}); }
  static WeylElement s_beta() { return WeylElement({0, 2, 1}); }
  static WeylElement generator(SimpleReflection s) {
    return s == SimpleReflection::alpha ? s_alpha() : s_beta();
  }
  /// Longest element s_alpha s_beta s_alpha = s_beta s_alpha s_beta.
  static WeylElement w0() { return s_alpha() * s_beta() * s_alpha(); }

  /// Element number n in the order 1, s_a, s_b, s_a s_b, s_b s_a, w0.
  static WeylElement from_index(std::size_t n);
  static const std::array<WeylElement, kOrder>& all();

  /// From an axis permutation; throws DomainError if `image` is not a bijection of {0,1,2}.
  static WeylElement from_permutation(const std::array<int, 3>& image);

  std::size_t index() const;
  const std::array<std::uint8_t, 3>& image() const { return image_; }

  WeylElement inverse() const;
  /// Reduced word; w0 is written s_alpha s_beta s_alpha.
  std::vector<SimpleReflection> reduced_word() const;
  std::size_t length() const { return reduced_word().size(); }
  /// "1", "s_a", "s_b", "s_a s_b", "s_b s_a" or "w0".
  std::string name() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement r;
    for (std::size_t j = 0; j < 3; ++j) r.image_[j] = a.image_[b.image_[j]];
    return r;
  }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  explicit WeylElement(std::array<std::uint8_t, 3> image) : image_(image) {}
  std::array<std::uint8_t, 3> image_;
};

}  // namespace octaflag
