#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace uavfog {

// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
// as easy as 1, 2, 3"). Stateless: output depends only on (counter, key).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

constexpr PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) noexcept {
  constexpr std::uint32_t kM0 = 0xD2511F53u;
  constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

// Named streams so that independent consumers never share counters.
enum class Stream : std::uint32_t {
  Population = 1,
  WoaStep = 2,
  PsoInit = 3,
  PsoStep = 4,
  Users = 5,
  Churn = 6,
  Derive = 7,
};

// Random draws addressed by (stream, a, b, c) under a 64-bit seed. The same
// address always yields the same value, whatever order draws are made in.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) noexcept
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)} {}

  constexpr std::uint64_t bits(Stream stream, std::uint32_t a, std::uint32_t b,
                               std::uint32_t c) const noexcept {
    const PhiloxCounter out =
        philox4x32_10({c, b, a, static_cast<std::uint32_t>(stream)}, key_);
    return (std::uint64_t{out[0]} << 32) | out[1];
  }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform(Stream stream, std::uint32_t a, std::uint32_t b,
                 std::uint32_t c) const noexcept {
    return static_cast<double>(bits(stream, a, b, c) >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound); bound must be > 0.
  std::uint32_t below(Stream stream, std::uint32_t a, std::uint32_t b,
                      std::uint32_t c, std::uint32_t bound) const noexcept {
    return static_cast<std::uint32_t>(((bits(stream, a, b, c) >> 32) * bound) >> 32);
  }

  // Standard normal via Box-Muller on draws c and c + 1.
  double normal(Stream stream, std::uint32_t a, std::uint32_t b,
                std::uint32_t c) const noexcept {
    const double u1 = 1.0 - uniform(stream, a, b, c);  // (0, 1]
    const double u2 = uniform(stream, a, b, c + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  PhiloxKey key_;
};

// Derives an independent 64-bit seed from a master seed and two indices.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint32_t a,
                                 std::uint32_t b) noexcept {
  return CounterRng(master).bits(Stream::Derive, a, b, 0);
}

}  // namespace uavfog
