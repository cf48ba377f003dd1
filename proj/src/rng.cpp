#include "xbow/rng.hpp"

#include <cassert>
#include <limits>

namespace xbow {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RngStream::next() { return engine_(); }

std::size_t RngStream::uniform_index(std::size_t n) {
  assert(n > 0);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t bound = n;
  // 2^64 mod n values at the top are rejected so every residue is equally likely.
  const std::uint64_t excess = (kMax % bound + 1) % bound;
  const std::uint64_t limit = kMax - excess;
  std::uint64_t r = next();
  while (r > limit) r = next();
  return static_cast<std::size_t>(r % bound);
}

double RngStream::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

RngStream RngStream::derive(std::uint64_t stream) const {
  return RngStream(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

}  // namespace xbow
