#pragma once

#include <cstdint>

namespace kp3 {

/// splitmix64, the reference mixer of Steele, Lea and Flood. The algorithm is
/// fixed so that seeded corpora are bit-reproducible across implementations:
///   state += 0x9E3779B97F4A7C15
///   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
///   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31; return z
/// Bounded draws use plain modulo reduction (documented, portable).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound) by modulo reduction; bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Bernoulli draw with probability permille/1000.
  bool chance(int permille) { return below(1000) < static_cast<std::uint64_t>(permille); }

 private:
  std::uint64_t state_;
};

/// Derives the seed of the `index`-th item of a corpus from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 rng(master ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return rng.next();
}

}  // namespace kp3
