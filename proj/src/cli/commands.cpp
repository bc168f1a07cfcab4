#include "newcomb/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>
#include <unistd.h>

#include "newcomb/omega_sim.hpp"
#include "newcomb/tlg.hpp"

namespace newcomb::cli {

namespace fs = std::filesystem;

namespace {

nlohmann::ordered_json per_choice(double c1, double c2) {
  nlohmann::ordered_json out;
  out["C1"] = c1;
  out["C2"] = c2;
  return out;
}

}  // namespace

std::string_view version() { return NEWCOMB_VERSION; }

nlohmann::ordered_json cmd_expected(const GameConfig& config) {
  validate_config(config);
  const auto& v = config.utilities;
  const auto& p = config.predictor;
  const auto eu = expected_utilities(v, p);
  const auto boundary = decision_boundary(v);
  const auto dominant = dominant_choice(v);

  nlohmann::ordered_json doc;
  doc["version"] = version();
  doc["config"] = config_to_json(config);
  doc["expected_utilities"] = {{"U1", eu.u1}, {"U2", eu.u2}};
  doc["choice"] = to_string(choose(v, p));
  doc["boundary"] = {{"a1", boundary.a1}, {"a2", boundary.a2},
                     {"b", boundary.b}};
  doc["dominant_choice"] =
      dominant ? nlohmann::ordered_json(to_string(*dominant)) : nullptr;
  return doc;
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

std::string region_csv(const GameConfig& config) {
  validate_config(config);
  const RegionGrid grid = region_grid(config.utilities, config.resolution,
                                      config.parallelism);
  std::string out = "p1,p2,choice\n";
  for (int i = 0; i < grid.resolution(); ++i) {
    const std::string p1 = format_probability(grid.coordinate(i));
    for (int j = 0; j < grid.resolution(); ++j) {
      out += p1;
      out += ',';
      out += format_probability(grid.coordinate(j));
      out += ',';
      out += to_string(grid.at(i, j));
      out += '\n';
    }
  }
  return out;
}

void cmd_region(const GameConfig& config, const fs::path& out) {
  write_output(out, region_csv(config));
}

std::string graph_dot(bool base_chain_only) {
  return tlg::to_dot(base_chain_only ? tlg::base_chain(4) : tlg::game_tlg());
}

void cmd_graph(const fs::path& out, bool base_chain_only) {
  write_output(out, graph_dot(base_chain_only));
}

nlohmann::ordered_json cmd_simulate(const GameConfig& config) {
  validate_config(config);
  const auto table = sim::compare(config.utilities, config.predictor,
                                  config.trials, RngSpec{config.seed},
                                  config.parallelism);

  nlohmann::ordered_json doc;
  doc["version"] = version();
  doc["config"] = config_to_json(config);
  doc["seed"] = config.seed;
  doc["trials"] = config.trials;
  doc["theoretical"] = per_choice(table.c1.theoretical, table.c2.theoretical);
  doc["numerical"] =
      per_choice(table.c1.empirical_mean, table.c2.empirical_mean);
  doc["standard_error"] =
      per_choice(table.c1.standard_error, table.c2.standard_error);
  doc["elapsed_seconds"] =
      table.c1.elapsed_seconds + table.c2.elapsed_seconds;
  return doc;
}

void write_output(const fs::path& path, std::string_view content) {
  std::error_code ec;
  const auto status = fs::status(path, ec);
  if (fs::exists(status)) {
    if (fs::is_directory(status)) {
      throw IoError("cannot write " + path.string() + ": is a directory");
    }
    constexpr auto kAnyWrite =
        fs::perms::owner_write | fs::perms::group_write | fs::perms::others_write;
    if ((status.permissions() & kAnyWrite) == fs::perms::none) {
      throw IoError("cannot write " + path.string() + ": file is read-only");
    }
  }

  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + path.string() + " for writing");
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    file.close();
    if (!file) {
      fs::remove(tmp, ec);
      throw IoError("failed writing " + path.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot replace " + path.string() + ": " + ec.message());
  }
}

}  // namespace newcomb::cli
