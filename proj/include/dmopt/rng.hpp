#pragma once

#include <cstdint>

namespace dmopt {

// Deterministic, platform-independent generator backing every random draw in
// the library. Standard-library distributions are implementation-defined, so
// a fixed bit-level recipe is used instead; this is what makes traces
// byte-identical across machines for the same (config, seed).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

/// Derives an independent substream seed for (seed, tag). Problem instances,
/// initial priorities and initial iterates draw from separate substreams so
/// adding a consumer never perturbs the others.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
  return SplitMix64(seed ^ (0xD1B54A32D192ED03ull * (tag + 1))).next();
}

}  // namespace dmopt
