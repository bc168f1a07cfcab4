#include "newcomb/omega_sim.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <string>
#include <thread>

#include "newcomb/error.hpp"
#include "newcomb/kernels.hpp"

namespace newcomb::sim {

namespace {

template <typename T>
T value_at(const TrialTrace& trace, tlg::NodeId node) {
  const auto* value = std::get_if<T>(&trace.at_node(node).value);
  if (value == nullptr) {
    throw InvariantError("trace node (" + std::to_string(node) +
                         ") holds an unexpected value type");
  }
  return *value;
}

// Value already resolved for some other member of `node`'s entanglement
// class, if any.
template <typename T>
std::optional<T> entangled_value(const tlg::TLGraph& graph,
                                 const std::map<tlg::NodeId, T>& resolved,
                                 tlg::NodeId node) {
  for (const auto& [other, value] : resolved) {
    if (other != node && graph.entangled(other, node)) return value;
  }
  return std::nullopt;
}

// Value resolved at a direct cause of `node`, if any.
template <typename T>
std::optional<T> resolved_cause(const tlg::TLGraph& graph,
                                const std::map<tlg::NodeId, T>& resolved,
                                tlg::NodeId node) {
  for (tlg::NodeId cause : graph.predecessors(node)) {
    if (auto it = resolved.find(cause); it != resolved.end()) return it->second;
  }
  return std::nullopt;
}

}  // namespace

const TraceEntry& TrialTrace::at_node(tlg::NodeId node) const {
  for (const auto& e : entries) {
    if (e.node == node) return e;
  }
  throw InvariantError("trace has no entry for node (" + std::to_string(node) +
                       ")");
}

CChoice TrialTrace::c_choice() const { return value_at<CChoice>(*this, 3); }
CChoice TrialTrace::prediction() const { return value_at<CChoice>(*this, 5); }
SChoice TrialTrace::s_choice() const { return value_at<SChoice>(*this, 2); }
CChoice TrialTrace::entangled_c_choice() const {
  return value_at<CChoice>(*this, 6);
}
double TrialTrace::utility() const { return value_at<double>(*this, 7); }

TrialTrace play_once(const UtilityMatrix& v, const PredictorProfile& p,
                     CChoice c_choice,
                     const std::function<double()>& draw_uniform) {
  validate(v);
  validate(p);

  const tlg::TLGraph& graph = tlg::game_tlg();
  const tlg::Timeline omega = tlg::player_timeline(graph, tlg::Player::kOmega);

  TrialTrace trace;
  trace.entries.reserve(omega.sequence.size());
  std::map<tlg::NodeId, CChoice> c_moves;
  std::optional<CChoice> prediction;
  std::optional<SChoice> s_move;

  for (tlg::NodeId id : omega.sequence) {
    const tlg::EventNode& node = graph.node(id);
    switch (node.kind) {
      case tlg::EventKind::kOracleStart:
        trace.entries.push_back({id, TraceStep::kOracleStart, {}});
        break;

      case tlg::EventKind::kCChoice: {
        // C's strategy is fixed; a copy must agree with what its entangled
        // partner already resolved to.
        const auto earlier = entangled_value(graph, c_moves, id);
        if (earlier && *earlier != c_choice) {
          throw InvariantError("entangled C moves disagree");
        }
        c_moves[id] = c_choice;
        trace.entries.push_back(
            {id, node.is_copy() ? TraceStep::kEntangledCChoice
                                : TraceStep::kCChoice,
             c_choice});
        break;
      }

      case tlg::EventKind::kElaboration: {
        // The oracle reports the move it inspected, unchanged.
        const auto inspected = resolved_cause(graph, c_moves, id);
        if (!inspected) {
          throw InvariantError("oracle elaborates before seeing C's move");
        }
        prediction = *inspected;
        trace.entries.push_back({id, TraceStep::kPrediction, *prediction});
        break;
      }

      case tlg::EventKind::kSChoice: {
        if (!prediction) {
          throw InvariantError("S moves before receiving the prediction");
        }
        s_move = resolve_s_choice(p.prob_s1_given(*prediction), draw_uniform());
        trace.entries.push_back({id, TraceStep::kSChoice, *s_move});
        break;
      }

      case tlg::EventKind::kOutcome: {
        const auto c_here = resolved_cause(graph, c_moves, id);
        if (!s_move || !c_here) {
          throw InvariantError("outcome resolved before both moves");
        }
        const double utility = v.at(*s_move, *c_here);
        trace.entries.push_back({id, TraceStep::kOutcome, utility});
        break;
      }

      case tlg::EventKind::kAction:
        throw InvariantError("generic event on the game timeline");
    }
  }

  // Entanglement: (6) repeats (3), and (7) scores S's move against (3).
  if (trace.entangled_c_choice() != trace.c_choice() ||
      trace.utility() != v.at(trace.s_choice(), trace.c_choice())) {
    throw InvariantError("entangled events resolved inconsistently");
  }
  return trace;
}

double standard_error(const UtilityMatrix& v, const PredictorProfile& p,
                      CChoice c_choice, std::uint64_t trials) {
  validate(v);
  validate(p);
  if (trials == 0) throw ArgumentError("trial count must be >= 1");
  const double r = p.prob_s1_given(c_choice);
  const double spread =
      std::abs(v.at(SChoice::kS1, c_choice) - v.at(SChoice::kS2, c_choice));
  return spread * std::sqrt(r * (1.0 - r) / static_cast<double>(trials));
}

int default_parallelism() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SimulationReport monte_carlo(const UtilityMatrix& v, const PredictorProfile& p,
                             CChoice c_choice, std::uint64_t trials,
                             const RngSpec& rng, int parallelism,
                             std::uint64_t stream_offset) {
  validate(v);
  validate(p);
  if (trials == 0) throw ArgumentError("trial count must be >= 1");
  if (parallelism < 1) {
    throw ArgumentError("parallelism must be >= 1, got " +
                        std::to_string(parallelism));
  }

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t s1 =
      kernels::count_s1(p.prob_s1_given(c_choice), rng.seed, stream_offset,
                        trials, parallelism);
  const std::uint64_t s2 = trials - s1;
  const double n = static_cast<double>(trials);
  const double mean = (static_cast<double>(s1) * v.at(SChoice::kS1, c_choice) +
                       static_cast<double>(s2) * v.at(SChoice::kS2, c_choice)) /
                      n;
  const auto stop = std::chrono::steady_clock::now();

  const auto eu = expected_utilities(v, p);
  SimulationReport report;
  report.c_choice = c_choice;
  report.trials = trials;
  report.seed = rng.seed;
  report.empirical_mean = mean;
  report.theoretical = c_choice == CChoice::kC1 ? eu.u1 : eu.u2;
  report.standard_error = standard_error(v, p, c_choice, trials);
  report.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  return report;
}

ComparisonTable compare(const UtilityMatrix& v, const PredictorProfile& p,
                        std::uint64_t trials, const RngSpec& rng,
                        int parallelism) {
  return {monte_carlo(v, p, CChoice::kC1, trials, rng, parallelism, 0),
          monte_carlo(v, p, CChoice::kC2, trials, rng, parallelism, trials)};
}

}  // namespace newcomb::sim
