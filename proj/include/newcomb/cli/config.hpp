#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "newcomb/decision.hpp"
#include "newcomb/error.hpp"
#include "newcomb/omega_sim.hpp"

namespace newcomb::cli {

// Malformed JSON. Line and column are 1-based.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : ValidationError(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct GameConfig {
  UtilityMatrix utilities;
  PredictorProfile predictor;
  std::uint64_t trials = 50000;
  std::uint64_t seed = 0;
  int resolution = 101;
  int parallelism = sim::default_parallelism();

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

// Classic payoff table with a coin-flip predictor, p = (0.5, 0.5). Used by
// the CLI when no --config is given.
GameConfig classic_config();

// Keys: utilities (required), predictor (required), trials, seed,
// resolution, parallelism. Unknown keys are rejected. Missing optional keys
// take the GameConfig defaults.
GameConfig parse_config(std::string_view text);

nlohmann::ordered_json config_to_json(const GameConfig& config);
std::string serialize_config(const GameConfig& config);

// Checks every field, naming the first bad one in the ValidationError.
void validate_config(const GameConfig& config);

}  // namespace newcomb::cli
