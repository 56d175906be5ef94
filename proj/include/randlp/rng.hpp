#pragma once

// Seeding and random streams.
//
// The stream generator is SplitMix64 (Steele, Lea, Flood 2014): state
// advances by the golden-ratio increment and each output is the state
// passed through the 64-bit finalizer below. Sub-streams are addressed by
// mix(seed, i) so trial i gets the same numbers no matter which thread or
// in which order it runs. Only integer arithmetic and IEEE division are
// used to turn outputs into doubles.

#include <cmath>
#include <cstdint>

namespace randlp {

struct Seed {
  std::uint64_t value = 0;

  constexpr Seed() = default;
  constexpr explicit Seed(std::uint64_t v) : value(v) {}
  friend constexpr bool operator==(Seed, Seed) = default;
};

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t finalize64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Sub-seed for stream `i` of `seed`.
constexpr Seed mix(Seed seed, std::uint64_t i) noexcept {
  return Seed{finalize64(seed.value + (i + 1) * kGolden) ^ finalize64(i)};
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  constexpr explicit SplitMix64(Seed seed) noexcept : state_(seed.value) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    state_ += kGolden;
    return finalize64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1].
  double uniform_pos() noexcept { return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53; }

  // Bernoulli(p) by comparing 53 random bits against p.
  bool bernoulli(double p) noexcept { return uniform() < p; }

  // Uniform integer in [0, bound) by rejection (bound > 0).
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x < reject_below);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace randlp
