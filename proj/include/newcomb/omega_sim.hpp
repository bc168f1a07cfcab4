#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "newcomb/decision.hpp"
#include "newcomb/rng.hpp"
#include "newcomb/tlg.hpp"

namespace newcomb::sim {

// What was resolved at a node of the oracle's timeline.
enum class TraceStep {
  kOracleStart,
  kCChoice,
  kPrediction,
  kSChoice,
  kEntangledCChoice,
  kOutcome,
};

struct TraceEntry {
  tlg::NodeId node = 0;
  TraceStep step = TraceStep::kOracleStart;
  std::variant<std::monostate, CChoice, SChoice, double> value;
};

// One play of the game, in the order the oracle lives it: 1, 3, 5, 2, 6, 7.
struct TrialTrace {
  std::vector<TraceEntry> entries;

  const TraceEntry& at_node(tlg::NodeId node) const;
  CChoice c_choice() const;
  CChoice prediction() const;
  SChoice s_choice() const;
  CChoice entangled_c_choice() const;
  double utility() const;
};

// Threshold rule shared by every sampling path: S plays S1 iff u < P(S1|C).
inline SChoice resolve_s_choice(double prob_s1, double u) {
  return u < prob_s1 ? SChoice::kS1 : SChoice::kS2;
}

// Plays one game by walking the oracle's timeline through the unfolded
// graph. `draw_uniform` is called exactly once, when S's node resolves.
// Throws InvariantError if an entangled pair resolves inconsistently.
TrialTrace play_once(const UtilityMatrix& v, const PredictorProfile& p,
                     CChoice c_choice,
                     const std::function<double()>& draw_uniform);

inline TrialTrace play_once(const UtilityMatrix& v, const PredictorProfile& p,
                            CChoice c_choice, TrialStream& stream) {
  return play_once(v, p, c_choice, [&stream] { return stream.next_uniform(); });
}

struct SimulationReport {
  CChoice c_choice = CChoice::kC1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double empirical_mean = 0.0;
  double theoretical = 0.0;
  double standard_error = 0.0;
  double elapsed_seconds = 0.0;
};

// |v1j - v2j| * sqrt(r (1 - r) / N) with r = P(S1 | Cj).
double standard_error(const UtilityMatrix& v, const PredictorProfile& p,
                      CChoice c_choice, std::uint64_t trials);

// Number of hardware threads, at least 1.
int default_parallelism();

// Averages `trials` plays with C fixed to `c_choice`. Trial i uses stream
// (seed, stream_offset + i). The mean is bit-identical for any parallelism.
SimulationReport monte_carlo(const UtilityMatrix& v, const PredictorProfile& p,
                             CChoice c_choice, std::uint64_t trials,
                             const RngSpec& rng, int parallelism,
                             std::uint64_t stream_offset = 0);

struct ComparisonTable {
  SimulationReport c1;
  SimulationReport c2;

  const SimulationReport& row(CChoice c) const {
    return c == CChoice::kC1 ? c1 : c2;
  }
};

// C1 uses streams [0, N), C2 uses [N, 2N).
ComparisonTable compare(const UtilityMatrix& v, const PredictorProfile& p,
                        std::uint64_t trials, const RngSpec& rng,
                        int parallelism);

}  // namespace newcomb::sim
