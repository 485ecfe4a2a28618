#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rcc/diagram.hpp"
#include "rcc/region_change.hpp"
#include "rcc/tait.hpp"

namespace rcc::oracle {

/// Region subsets are enumerated only when c + 2 <= this bound.
inline constexpr int kMaxEnumeratedRegions = 16;

/// Every crossing set reachable by some set of region crossing changes,
/// as bitmasks over crossings.
struct AchievableSet {
  int crossings = 0;
  std::vector<std::uint32_t> members;  // sorted

  std::size_t size() const { return members.size(); }
  bool contains(std::uint32_t mask) const;
  bool contains(const CrossingSet& target) const;
};

/// Brute force over all 2^(c+2) region subsets. Reads only the face
/// boundaries, never the GF(2) solver.
AchievableSet enumerate_achievable(const Diagram& d);

struct ParityCount {
  int region = 0;
  int component = 0;
  int count = 0;  // boundary crossings between the component and the rest
};

struct RegionParityReport {
  std::vector<ParityCount> counts;
  std::vector<ParityCount> violations;
  bool ok() const { return violations.empty(); }
};

RegionParityReport audit_region_parity(const Diagram& d);

struct CrossCheckReport {
  int crossings = 0;
  int n_traversal = 0;
  int n_rank = 0;
  int rank = 0;
  bool enumerated = false;
  std::size_t targets_checked = 0;
};

/// Traversal count vs rank formula, brute-force reachability vs row-space
/// membership, and parity criterion vs membership. Throws
/// Error(CheckFailed) carrying the diagram's PD code on any mismatch.
CrossCheckReport cross_check(const Diagram& d);

/// Random connected plane multigraph with the given number of edges:
/// a random tree with a random rotation, then extra edges that each split
/// a face, so the embedding stays planar. Signs are random.
PlaneGraph random_plane_graph(std::mt19937_64& rng, int edges);

/// Medial diagram of a random plane graph with 1..max_crossings edges.
Diagram random_diagram(std::mt19937_64& rng, int max_crossings);

/// Independent per-trial seed derived from a base seed and a trial index.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  int crossings = 0;
  int n_traversal = 0;
  int n_rank = 0;
  int rank = 0;
  bool enumerated = false;
  bool pass = false;
  std::string failure;  // message and PD code when pass is false
};

TrialRecord run_trial(std::uint64_t base_seed, std::uint64_t index, int max_crossings);

}  // namespace rcc::oracle
