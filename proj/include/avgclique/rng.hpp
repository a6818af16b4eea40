#pragma once

#include <cstdint>

namespace avgclique {

/// Generator identification embedded in experiment records for provenance.
inline constexpr const char* kGeneratorId = "xoshiro256ss-splitmix64-v1";

/// Seed plus per-task substream index. The same (seed, stream, domain,
/// extra) tuple always reproduces the same variate sequence, on any
/// platform: the generator below is implemented bit-exactly and does not
/// go through std::uniform_* distributions.
struct RngSeed {
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Domain tags keep independent uses of the same (seed, stream) pair from
/// replaying each other's variates.
enum class RngDomain : std::uint64_t {
  EdgeSampling = 0x6564676573ULL,   // "edges"
  GreedyRestarts = 0x677265656479ULL,  // "greedy"
  Generic = 0x67656eULL,
};

/// xoshiro256** keyed through splitmix64.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream, RngDomain domain, std::uint64_t extra = 0) {
    std::uint64_t h = detail::mix64(seed);
    h = detail::mix64(h ^ stream);
    h = detail::mix64(h ^ static_cast<std::uint64_t>(domain));
    h = detail::mix64(h ^ extra);
    for (auto& w : s_) {
      h = detail::mix64(h);
      w = h;
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  explicit Rng(RngSeed seed, RngDomain domain = RngDomain::Generic, std::uint64_t extra = 0)
      : Rng(seed.seed, seed.stream, domain, extra) {}

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53 significand bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace avgclique
