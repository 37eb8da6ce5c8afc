#pragma once

#include <cstdint>
#include <random>

namespace gfwsn {

std::uint64_t splitmix64(std::uint64_t x);

/// Seeded random stream with platform-independent draws.
///
/// All floating-point conversions are done explicitly (never through
/// std::*_distribution, whose output is implementation-defined), so a
/// given seed produces bit-identical sequences everywhere. Independent
/// child streams for parallel work are derived with child().
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal via Box-Muller (second deviate cached).
  double normal();

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_int(std::uint64_t bound);

  /// Independent stream derived from (this stream's seed, index).
  RngStream child(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace gfwsn
