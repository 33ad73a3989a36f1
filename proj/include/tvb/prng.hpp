#ifndef TVB_PRNG_HPP
#define TVB_PRNG_HPP

#include <cstdint>

namespace tvb {

/// splitmix64 step (Vigna). Used to derive independent sub-seeds.
/// Constants: 0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9, 0x94D049BB133111EB.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// xorshift64* generator (Marsaglia/Vigna): shifts 12, 25, 27 and the
/// multiplier 2685821657736338717. Fixed here so trial suites reproduce
/// bit-for-bit across implementations.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) : state_(seed ? seed : 0x4D595DF4D0F33173ULL) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 2685821657736338717ULL;
  }

  /// Uniform-ish integer in [lo, hi] via modulo; the slight bias is
  /// irrelevant here, determinism is what matters.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace tvb

#endif
