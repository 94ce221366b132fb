#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace graybox {

// SplitMix64 (Steele, Lea, Vigna). Chosen because the whole sequence is a
// pure function of the 64-bit seed, so results are bit-identical across
// platforms. All randomness in this project flows through this generator;
// std::random distributions are never used (their output is
// implementation-defined).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n). Fixed-point multiply keeps the draw exact and
  // avoids platform-dependent modulo bias handling.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

  // Box-Muller. Consumes two draws per call; the sine branch is discarded so
  // each call is a self-contained function of the stream position.
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
  }

private:
  std::uint64_t state_;
};

// Derives an independent child seed from (seed, tag, index). Used to give
// every consumer (shuffling, init, attack starts, key sampling, ...) its own
// stream so adding a consumer never shifts another one's draws.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the tag
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  SplitMix64 mix(seed ^ h);
  mix.next_u64();
  return mix.next_u64() ^ (SplitMix64(index * 0x9e3779b97f4a7c15ull + 0x5851f42d4c957f2dull).next_u64());
}

}  // namespace graybox
