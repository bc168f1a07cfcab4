#pragma once

#include <cstdint>

#include "newcomb/decision.hpp"

// OpenMP data-parallel kernels. Serial counterparts live in reference.hpp.
namespace newcomb::kernels {

// Counts trials in [first, first + count) whose S move resolves to S1 under
// P(S1) = prob_s1. Integer reduction, so the result does not depend on the
// thread count or schedule.
std::uint64_t count_s1(double prob_s1, std::uint64_t seed, std::uint64_t first,
                       std::uint64_t count, int parallelism);

// Fills every cell of `grid` with choose(v, cell). `parallelism` <= 0 means
// the OpenMP default.
void fill_region(const UtilityMatrix& v, RegionGrid& grid, int parallelism);

}  // namespace newcomb::kernels
