#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace camoforge {

/// xoshiro256** 1.0 (Blackman/Vigna, public domain), seeded through
/// splitmix64. Pinned here so that seeded runs (gate selection, sampled
/// signatures, attack sampling) reproduce bit-for-bit on any platform.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform value in [0, n) by rejection sampling (no modulo bias).
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  /// Fisher-Yates shuffle; element order depends only on the seed.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  /// Random bit vector of the given width, LSB-first from successive words.
  std::vector<bool> bits(std::size_t width) {
    std::vector<bool> v(width);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < width; ++i) {
      if (i % 64 == 0) word = next();
      v[i] = (word >> (i % 64)) & 1u;
    }
    return v;
  }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

} // namespace camoforge
