#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cgv {

/// Textual description of the sampling scheme, embedded in reports.
inline constexpr std::string_view kPrngSpec =
    "mt19937_64 seeded with splitmix64(seed) XOR splitmix64(index + 1); "
    "integers in [-R,R] by rejection on raw 64-bit draws";

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the index-th sample of a run seeded with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Platform-independent integer draws (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi], hi - lo < 2^63.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cgv
