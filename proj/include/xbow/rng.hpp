#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace xbow {

/// Reproducible random stream.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Integer and real draws are derived here rather than through the
/// standard distributions, which are implementation-defined, so a seed yields
/// the same draws with every compiler and platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next();

  /// Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01();

  /// Independent child stream; used to give each feature class, label or
  /// SVQ block its own seed so results do not depend on processing order.
  RngStream derive(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace xbow
