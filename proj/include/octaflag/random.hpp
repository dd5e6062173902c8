#pragma once

#include <cstdint>
#include <optional>

namespace octaflag {

/// Counter-based 64-bit generator.
///
/// Output n of stream s under seed k is a pure function of (k, s, n), so
/// independent workers can draw from disjoint substreams and still produce
/// results that do not depend on scheduling. Normal variates use Box-Muller
/// rather than std::normal_distribution, whose algorithm is unspecified.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal.
  double normal();

  /// Independent generator for worker `stream`, derived from the same seed.
  CounterRng substream(std::uint64_t stream) const { return CounterRng(seed_, stream); }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::optional<double> spare_;
};

}  // namespace octaflag
