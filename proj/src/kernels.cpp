#include "newcomb/kernels.hpp"

#include <omp.h>

#include <cstdint>

#include "newcomb/omega_sim.hpp"
#include "newcomb/rng.hpp"

namespace newcomb::kernels {

std::uint64_t count_s1(double prob_s1, std::uint64_t seed, std::uint64_t first,
                       std::uint64_t count, int parallelism) {
  const auto n = static_cast<std::int64_t>(count);
  const int threads = parallelism > 0 ? parallelism : omp_get_max_threads();
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) \
    num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    TrialStream stream(seed, first + static_cast<std::uint64_t>(i));
    if (sim::resolve_s_choice(prob_s1, stream.next_uniform()) == SChoice::kS1) {
      ++hits;
    }
  }
  return hits;
}

void fill_region(const UtilityMatrix& v, RegionGrid& grid, int parallelism) {
  const int r = grid.resolution();
  const int threads = parallelism > 0 ? parallelism : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (int j = 0; j < r; ++j) {
    const double p2 = grid.coordinate(j);
    for (int i = 0; i < r; ++i) {
      grid.set(i, j, choose(v, {grid.coordinate(i), p2}));
    }
  }
}

}  // namespace newcomb::kernels
