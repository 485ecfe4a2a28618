#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcc/diagram.hpp"
#include "rcc/tait.hpp"

namespace rcc::cli {

enum class Format { Text, Json };

/// Result of one subcommand. Exit codes: 0 success, 1 input error,
/// 2 theorem violation or internal inconsistency.
struct Output {
  int exit_code = 0;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path);

Output cmd_info(const std::string& pd_path, Format format);
/// Crossing ids are 1-based.
Output cmd_solve(const std::string& pd_path, const std::vector<int>& crossing_ids, Format format);
Output cmd_unknot(const std::string& pd_path, Format format);

struct GraphOptions {
  Format format = Format::Text;
  bool dot = false;  // append DOT for G and its dual
  bool pd = false;   // append the medial diagram's PD code
};
Output cmd_graph(const std::string& graph_path, const GraphOptions& options);

/// Randomized cross-check suite; stdout receives one JSON object per trial.
Output cmd_check(std::uint64_t seed, int trials, int max_crossings);

// Report builders over already-parsed inputs, shared by the commands.
Output info_report(const Diagram& d, Format format);
Output solve_report(const Diagram& d, const std::vector<int>& crossing_ids, Format format);
Output unknot_report(const Diagram& d, Format format);
Output graph_report(const PlaneGraph& g, const GraphOptions& options);

}  // namespace rcc::cli
