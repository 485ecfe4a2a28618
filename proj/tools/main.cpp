#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcc/cli.hpp"

namespace {

int finish(const rcc::cli::Output& result) {
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Region crossing change toolkit: incidence matrices, component counts and unknotting plans"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;

  auto* info = app.add_subcommand("info", "Summarize a PD diagram: regions, rank, components, linking numbers");
  info->add_option("pd", path, "PD file")->required()->check(CLI::ExistingFile);
  info->add_flag("--json", json, "Machine-readable output");

  std::vector<int> crossings;
  auto* solve = app.add_subcommand("solve", "Find regions whose region crossing changes flip exactly the given crossings");
  solve->add_option("pd", path, "PD file")->required()->check(CLI::ExistingFile);
  solve->add_option("crossings", crossings, "1-based crossing ids")->required();
  solve->add_flag("--json", json, "Machine-readable output");

  auto* unknot = app.add_subcommand("unknot", "Decide whether region crossing changes unknot the diagram and plan them");
  unknot->add_option("pd", path, "PD file")->required()->check(CLI::ExistingFile);
  unknot->add_flag("--json", json, "Machine-readable output");

  rcc::cli::GraphOptions graph_options;
  auto* graph = app.add_subcommand("graph", "Analyze the link diagram of a signed plane graph");
  graph->add_option("graph", path, "Plane-graph file")->required()->check(CLI::ExistingFile);
  graph->add_flag("--json", json, "Machine-readable output");
  graph->add_flag("--dot", graph_options.dot, "Append Graphviz DOT for G and its dual");
  graph->add_flag("--pd", graph_options.pd, "Append the PD code of the medial diagram");

  std::uint64_t seed = 1;
  int trials = 1000;
  int max_c = 12;
  auto* check = app.add_subcommand("check", "Run the randomized cross-check suite (JSON lines on stdout)");
  check->add_option("--seed", seed, "Base seed")->capture_default_str();
  check->add_option("--trials", trials, "Number of random diagrams")->capture_default_str()->check(CLI::NonNegativeNumber);
  check->add_option("--max-c", max_c, "Maximum crossing count")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto format = json ? rcc::cli::Format::Json : rcc::cli::Format::Text;
  graph_options.format = format;
  if (*info) return finish(rcc::cli::cmd_info(path, format));
  if (*solve) return finish(rcc::cli::cmd_solve(path, crossings, format));
  if (*unknot) return finish(rcc::cli::cmd_unknot(path, format));
  if (*graph) return finish(rcc::cli::cmd_graph(path, graph_options));
  return finish(rcc::cli::cmd_check(seed, trials, max_c));
}
