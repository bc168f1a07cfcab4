// newcomb: expected-utility analysis, time-lines graphs and oracle-frame
// Monte Carlo for Newcomb's problem.
//
//   newcomb expected [--config PATH]
//   newcomb region   [--config PATH] --out PATH [--resolution N]
//   newcomb graph    --out PATH [--base-chain-only]
//   newcomb simulate [--config PATH] [--seed U64] [--trials N] [--parallelism N]
//
// Exit codes: 0 success, 2 invalid input, 3 I/O failure, 1 anything else.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "newcomb/cli/commands.hpp"
#include "newcomb/cli/config.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

namespace cli = newcomb::cli;

struct Options {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<int> resolution;
  std::optional<int> parallelism;
  bool base_chain_only = false;
};

cli::GameConfig load_config(const Options& opts) {
  cli::GameConfig config = cli::classic_config();
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path, std::ios::binary);
    if (!in) throw cli::IoError("cannot read config " + opts.config_path);
    std::ostringstream text;
    text << in.rdbuf();
    config = cli::parse_config(text.str());
  }
  if (opts.seed) config.seed = *opts.seed;
  if (opts.trials) config.trials = *opts.trials;
  if (opts.resolution) config.resolution = *opts.resolution;
  if (opts.parallelism) config.parallelism = *opts.parallelism;
  cli::validate_config(config);
  return config;
}

void emit(const Options& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    cli::write_output(opts.out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newcomb's problem: decision regions, time-lines graphs and "
               "oracle-frame simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cli::version()));

  Options opts;
  auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "game configuration (JSON)");
    cmd->add_option("--out", opts.out_path, "output file");
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--trials", opts.trials, "trials per choice");
    cmd->add_option("--resolution", opts.resolution, "grid points per axis");
    cmd->add_option("--parallelism", opts.parallelism, "worker threads");
  };

  auto* expected = app.add_subcommand("expected", "expected utilities and choice");
  auto* region = app.add_subcommand("region", "decision region grid as CSV");
  auto* graph = app.add_subcommand("graph", "time-lines graph as DOT");
  auto* simulate = app.add_subcommand("simulate", "theoretical vs numerical table");
  for (auto* cmd : {expected, region, graph, simulate}) add_common(cmd);
  region->get_option("--out")->required();
  graph->get_option("--out")->required();
  graph->add_flag("--base-chain-only", opts.base_chain_only,
                  "export the plain 4-event chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    const cli::GameConfig config = load_config(opts);
    if (*expected) {
      emit(opts, cli::cmd_expected(config).dump(2) + "\n");
    } else if (*region) {
      cli::cmd_region(config, opts.out_path);
    } else if (*graph) {
      cli::cmd_graph(opts.out_path, opts.base_chain_only);
    } else if (*simulate) {
      emit(opts, cli::cmd_simulate(config).dump(2) + "\n");
    }
  } catch (const cli::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const newcomb::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const newcomb::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
