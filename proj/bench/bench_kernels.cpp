// Compares the OpenMP kernels against the serial reference implementations.
//
//   bench_kernels [trials] [resolution]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "newcomb/decision.hpp"
#include "newcomb/kernels.hpp"
#include "newcomb/omega_sim.hpp"
#include "newcomb/reference.hpp"

namespace {

template <typename F>
double time_ms(F&& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace newcomb;
  const std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000000;
  const int resolution = argc > 2 ? std::atoi(argv[2]) : 1001;
  const int threads = sim::default_parallelism();

  const auto v = UtilityMatrix::classic();
  const PredictorProfile p{0.5, 0.5};
  const RngSpec rng{0};

  std::printf("threads available: %d\n", threads);
  std::printf("monte carlo, %llu trials\n",
              static_cast<unsigned long long>(trials));

  volatile double sink = 0.0;
  const double t_trace = time_ms([&] {
    sink = reference::mean_utility(v, p, CChoice::kC1, trials, rng);
  }, 1);
  std::printf("  reference play_once walk   %10.2f ms\n", t_trace);

  const double t_serial = time_ms([&] {
    sink = static_cast<double>(reference::count_s1(0.5, rng.seed, 0, trials));
  });
  std::printf("  reference serial count     %10.2f ms\n", t_serial);

  for (int t : {1, 2, 4, 8}) {
    const double ms = time_ms([&] {
      sink = static_cast<double>(kernels::count_s1(0.5, rng.seed, 0, trials, t));
    });
    std::printf("  omp kernel, %d thread(s)    %10.2f ms  (x%.2f vs serial)\n",
                t, ms, t_serial / ms);
  }

  std::printf("region grid, %d x %d\n", resolution, resolution);
  const double g_serial = time_ms([&] {
    sink = static_cast<double>(reference::region_grid(v, resolution).size());
  });
  std::printf("  reference serial           %10.2f ms\n", g_serial);
  for (int t : {1, 2, 4, 8}) {
    const double ms = time_ms([&] {
      sink = static_cast<double>(region_grid(v, resolution, t).size());
    });
    std::printf("  omp kernel, %d thread(s)    %10.2f ms  (x%.2f vs serial)\n",
                t, ms, g_serial / ms);
  }
  (void)sink;
  return 0;
}
