#include "newcomb/cli/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace newcomb::cli {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 6> kKnownKeys = {
    "utilities", "predictor", "trials", "seed", "resolution", "parallelism"};

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ValidationError(field + ": " + message);
}

double read_number(const json& node, const std::string& field) {
  if (!node.is_number()) fail(field, "expected a number");
  return node.get<double>();
}

std::uint64_t read_unsigned(const json& node, const std::string& field) {
  if (node.is_number_unsigned()) return node.get<std::uint64_t>();
  if (node.is_number_integer()) fail(field, "must be non-negative");
  if (node.is_number_float()) {
    // Accept 50000.0 but not 1.5.
    const double d = node.get<double>();
    if (d >= 0.0 && d < 0x1.0p64 && std::floor(d) == d) {
      return static_cast<std::uint64_t>(d);
    }
  }
  fail(field, "expected a non-negative integer");
}

int read_int(const json& node, const std::string& field) {
  const std::uint64_t value = read_unsigned(node, field);
  if (value > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    fail(field, "too large");
  }
  return static_cast<int>(value);
}

std::array<double, 2> read_pair(const json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 2) {
    fail(field, "expected an array of 2 numbers");
  }
  return {read_number(node[0], field + "[0]"),
          read_number(node[1], field + "[1]")};
}

// Byte offset -> (line, column), both 1-based.
std::pair<std::size_t, std::size_t> locate(std::string_view text,
                                           std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

GameConfig classic_config() {
  GameConfig config;
  config.utilities = UtilityMatrix::classic();
  config.predictor = {0.5, 0.5};
  return config;
}

void validate_config(const GameConfig& config) {
  const UtilityMatrix& v = config.utilities;
  const std::array<std::pair<const char*, double>, 4> cells = {{
      {"utilities[0][0]", v.v11},
      {"utilities[0][1]", v.v12},
      {"utilities[1][0]", v.v21},
      {"utilities[1][1]", v.v22},
  }};
  for (const auto& [field, value] : cells) {
    if (!std::isfinite(value) || value < 0.0) {
      fail(field, "utility must be finite and >= 0");
    }
  }
  const std::array<std::pair<const char*, double>, 2> probs = {{
      {"predictor[0]", config.predictor.p1},
      {"predictor[1]", config.predictor.p2},
  }};
  for (const auto& [field, value] : probs) {
    if (!(value >= 0.0 && value <= 1.0)) {
      fail(field, "probability must lie in [0, 1]");
    }
  }
  if (config.trials < 1) fail("trials", "must be >= 1");
  if (config.resolution < 2) fail("resolution", "must be >= 2");
  if (config.parallelism < 1) fail("parallelism", "must be >= 1");
}

GameConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }

  if (!doc.is_object()) fail("config", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) ==
        kKnownKeys.end()) {
      fail(key, "unknown key");
    }
  }

  GameConfig config;
  if (!doc.contains("utilities")) fail("utilities", "required");
  const json& rows = doc["utilities"];
  if (!rows.is_array() || rows.size() != 2) {
    fail("utilities", "expected a 2x2 array");
  }
  const auto top = read_pair(rows[0], "utilities[0]");
  const auto bottom = read_pair(rows[1], "utilities[1]");
  config.utilities = {top[0], top[1], bottom[0], bottom[1]};

  if (!doc.contains("predictor")) fail("predictor", "required");
  const auto p = read_pair(doc["predictor"], "predictor");
  config.predictor = {p[0], p[1]};

  if (doc.contains("trials")) config.trials = read_unsigned(doc["trials"], "trials");
  if (doc.contains("seed")) config.seed = read_unsigned(doc["seed"], "seed");
  if (doc.contains("resolution")) {
    config.resolution = read_int(doc["resolution"], "resolution");
  }
  if (doc.contains("parallelism")) {
    config.parallelism = read_int(doc["parallelism"], "parallelism");
  }

  validate_config(config);
  return config;
}

nlohmann::ordered_json config_to_json(const GameConfig& config) {
  const UtilityMatrix& v = config.utilities;
  nlohmann::ordered_json out;
  out["utilities"] = {{v.v11, v.v12}, {v.v21, v.v22}};
  out["predictor"] = {config.predictor.p1, config.predictor.p2};
  out["trials"] = config.trials;
  out["seed"] = config.seed;
  out["resolution"] = config.resolution;
  out["parallelism"] = config.parallelism;
  return out;
}

std::string serialize_config(const GameConfig& config) {
  return config_to_json(config).dump(2) + "\n";
}

}  // namespace newcomb::cli
