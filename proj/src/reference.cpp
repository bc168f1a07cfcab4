#include "newcomb/reference.hpp"

#include "newcomb/error.hpp"
#include "newcomb/omega_sim.hpp"

namespace newcomb::reference {

double mean_utility(const UtilityMatrix& v, const PredictorProfile& p,
                    CChoice c_choice, std::uint64_t count, const RngSpec& rng,
                    std::uint64_t first) {
  if (count == 0) throw ArgumentError("trial count must be >= 1");
  double sum = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    TrialStream stream = rng.stream(first + i);
    sum += sim::play_once(v, p, c_choice, stream).utility();
  }
  return sum / static_cast<double>(count);
}

std::uint64_t count_s1(double prob_s1, std::uint64_t seed, std::uint64_t first,
                       std::uint64_t count) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    TrialStream stream(seed, first + i);
    if (sim::resolve_s_choice(prob_s1, stream.next_uniform()) == SChoice::kS1) {
      ++hits;
    }
  }
  return hits;
}

RegionGrid region_grid(const UtilityMatrix& v, int resolution) {
  RegionGrid grid(resolution);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      grid.set(i, j, choose(v, {grid.coordinate(i), grid.coordinate(j)}));
    }
  }
  return grid;
}

}  // namespace newcomb::reference
