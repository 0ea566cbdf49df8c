#pragma once

#include <array>
#include <cstdint>

namespace segcover {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used to expand seeds.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// xoshiro256** 1.0 (Blackman & Vigna), state filled from SplitMix64 of the
// seed. Bounded integers and reals are derived here rather than through the
// <random> distributions, whose outputs differ between standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  // Independent stream `index` of a master seed. Streams depend only on
  // (master, index), never on scheduling.
  static Rng stream(std::uint64_t master, std::uint64_t index) noexcept {
    std::uint64_t sm = master;
    const std::uint64_t a = splitmix64(sm);
    std::uint64_t si = index ^ 0xD1B54A32D192ED03ULL;
    const std::uint64_t b = splitmix64(si);
    return Rng(a ^ (b * 0xFF51AFD7ED558CCDULL));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
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

  // Uniform in [0, bound). bound must be > 0. Lemire's multiply-shift with
  // rejection, so unbiased.
  std::uint64_t uniform(std::uint64_t bound) noexcept {
    __extension__ using U128 = unsigned __int128;
    U128 m = static_cast<U128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<U128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace segcover
