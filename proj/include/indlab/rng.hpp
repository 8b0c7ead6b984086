#pragma once

#include <cstdint>
#include <string_view>

namespace indlab {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// splitmix64 generator. Streams are derived from (seed, label, index) so every
/// consumer of randomness gets its own reproducible sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}

  static Rng stream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    Rng mix(seed ^ h);
    mix.next();
    return Rng(mix.next() ^ (index * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    while (true) {
      const std::uint64_t r = next();
      if (r >= limit) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace indlab
