#pragma once

#include <cstdint>

namespace newcomb {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based per-trial stream. The state depends only on (seed, trial),
// so trials can be evaluated in any order on any thread.
class TrialStream {
 public:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  constexpr TrialStream(std::uint64_t seed, std::uint64_t trial)
      : state_(mix64(mix64(seed ^ 0x6a09e667f3bcc909ULL) + trial * kGolden)) {}

  constexpr std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  constexpr double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  constexpr double operator()() { return next_uniform(); }

 private:
  std::uint64_t state_;
};

struct RngSpec {
  std::uint64_t seed = 0;

  constexpr TrialStream stream(std::uint64_t trial) const {
    return TrialStream(seed, trial);
  }
};

}  // namespace newcomb
