#pragma once

#include <cstdint>

namespace mclp {

/// SplitMix64 step (Steele, Lea & Flood). Used to expand a user seed into a
/// nonzero xorshift state and as a cheap stateless mixer in tests.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// xorshift64* generator (Marsaglia's xorshift with Vigna's multiplier).
/// The full recurrence, so instances can be regenerated in any language:
///
///   s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;
///   output = s * 0x2545F4914F6CDD1D  (mod 2^64)
///
/// The state is seeded with one SplitMix64 step of the user seed and forced
/// nonzero (an all-zero state is a fixed point of the xorshift recurrence).
/// Doubles are produced from the top 53 bits: (output >> 11) * 2^-53.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) {
    std::uint64_t s = seed;
    state_ = splitmix64(s);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
  }

  std::uint64_t next_u64() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double next_double(double lo, double hi) {
    return lo + next_double() * (hi - lo);
  }

  /// Uniform integer in [0, bound). Uses the high bits via 128-bit multiply
  /// to avoid modulo bias mattering at our scales.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  /// Standard-normal deviate by the Irwin-Hall sum of 12 uniforms. Uses only
  /// IEEE additions, so identical seeds reproduce bit-identically across
  /// conforming implementations; the tail truncates at +-6 sigma, which is
  /// irrelevant for cluster offsets.
  double next_gaussian() {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += next_double();
    return s - 6.0;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mclp
