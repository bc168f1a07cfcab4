#pragma once

#include <cstdint>

#include "newcomb/decision.hpp"
#include "newcomb/rng.hpp"

// Serial reference implementations. Kept for tests and benchmarks; the
// library entry points use the kernels in kernels.hpp.
namespace newcomb::reference {

// Straight sum of play_once utilities over trials [first, first + count),
// each trial walking the full oracle timeline.
double mean_utility(const UtilityMatrix& v, const PredictorProfile& p,
                    CChoice c_choice, std::uint64_t count, const RngSpec& rng,
                    std::uint64_t first = 0);

// Single-threaded count with the same semantics as kernels::count_s1.
std::uint64_t count_s1(double prob_s1, std::uint64_t seed, std::uint64_t first,
                       std::uint64_t count);

RegionGrid region_grid(const UtilityMatrix& v, int resolution);

}  // namespace newcomb::reference
