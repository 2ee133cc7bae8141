#pragma once

#include <cstdint>

namespace annuli {

// splitmix64. Hand-rolled on purpose: std:: distributions are
// implementation-defined, and seeded runs must reproduce bit-for-bit
// across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform over [0, n). Multiply-shift map; the bias (< 2^-64 per draw) is
  // irrelevant here and the result is deterministic, which is what matters.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace annuli
