#pragma once

#include <cstdint>
#include <random>

namespace wsn {

// One SplitMix64 step. Used only to derive independent substream seeds
// (positions, energies, election draws) from a single master seed.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_stream_seed(std::uint64_t master, unsigned stream) {
  std::uint64_t state = master;
  std::uint64_t out = 0;
  for (unsigned i = 0; i <= stream; ++i) {
    out = splitmix64_next(state);
  }
  return out;
}

/// Deterministic, portable generator: std::mt19937_64 (bit-exact output
/// sequence on every conforming implementation) plus an explicit 53-bit
/// mapping to doubles, so runs reproduce across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform index in [0, n); n must be > 0.
  std::size_t uniform_index(std::size_t n) {
    auto idx = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return idx < n ? idx : n - 1;
  }

  bool operator==(const Rng&) const = default;

 private:
  std::mt19937_64 gen_;
};

}  // namespace wsn
