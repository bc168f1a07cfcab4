#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "newcomb/cli/config.hpp"

namespace newcomb::cli {

std::string_view version();

// U1, U2, the chosen action, boundary coefficients and strict dominance.
nlohmann::ordered_json cmd_expected(const GameConfig& config);

// "p1,p2,choice" rows, p1 outer, both ascending.
std::string region_csv(const GameConfig& config);
void cmd_region(const GameConfig& config, const std::filesystem::path& out);

// DOT for the unfolded game graph, or for the plain 4-event chain.
std::string graph_dot(bool base_chain_only);
void cmd_graph(const std::filesystem::path& out, bool base_chain_only);

// Theoretical and numerical utilities for both of C's moves.
nlohmann::ordered_json cmd_simulate(const GameConfig& config);

// Up to 6 significant digits, trailing zeros trimmed: 0.5, 1, 0.07.
std::string format_probability(double p);

// Writes via a temporary file and rename, so a failed write leaves any
// existing file untouched. Refuses to replace a file with no write
// permission bits set. Throws IoError.
void write_output(const std::filesystem::path& path, std::string_view content);

}  // namespace newcomb::cli
