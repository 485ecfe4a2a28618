#include "rcc/oracle.hpp"

#include <algorithm>
#include <bit>

#include "rcc/error.hpp"

namespace rcc::oracle {

namespace {

std::uint32_t to_mask(const CrossingSet& s) {
  std::uint32_t mask = 0;
  for (std::size_t p : s.ones()) mask |= std::uint32_t{1} << p;
  return mask;
}

CrossingSet from_mask(std::uint32_t mask, int crossings) {
  CrossingSet s(crossings);
  for (int p = 0; p < crossings; ++p) {
    if ((mask >> p) & 1U) s.set(p);
  }
  return s;
}

[[noreturn]] void fail(const Diagram& d, const std::string& what) {
  throw Error(ErrorCode::CheckFailed, what + "\n" + format_pd_code(d.to_pd()));
}

}  // namespace

bool AchievableSet::contains(std::uint32_t mask) const { return std::binary_search(members.begin(), members.end(), mask); }

bool AchievableSet::contains(const CrossingSet& target) const { return contains(to_mask(target)); }

AchievableSet enumerate_achievable(const Diagram& d) {
  const int regions = d.region_count();
  if (regions > kMaxEnumeratedRegions) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(regions) + " regions exceed the enumeration budget of " +
                                               std::to_string(kMaxEnumeratedRegions));
  }
  std::vector<std::uint32_t> region_mask(regions, 0);
  for (const Region& r : d.regions()) {
    for (int p : r.boundary_crossings) region_mask[r.id] |= std::uint32_t{1} << p;
  }
  std::vector<char> hit(std::size_t{1} << d.crossing_count(), 0);
  // Gray code: consecutive subsets differ by one region.
  std::uint32_t current = 0;
  hit[0] = 1;
  const std::uint32_t subsets = std::uint32_t{1} << regions;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const int changed = std::countr_zero(k);
    current ^= region_mask[changed];
    hit[current] = 1;
  }
  AchievableSet out;
  out.crossings = d.crossing_count();
  for (std::uint32_t mask = 0; mask < hit.size(); ++mask) {
    if (hit[mask]) out.members.push_back(mask);
  }
  return out;
}

RegionParityReport audit_region_parity(const Diagram& d) {
  RegionParityReport report;
  for (const Region& r : d.regions()) {
    std::vector<int> count(d.component_count(), 0);
    for (int p : r.boundary_crossings) {
      const auto [under, over] = d.strand_components(p);
      if (under != over) {
        ++count[under];
        ++count[over];
      }
    }
    for (int i = 0; i < d.component_count(); ++i) {
      const ParityCount entry{r.id, i, count[i]};
      report.counts.push_back(entry);
      if (count[i] % 2 != 0) report.violations.push_back(entry);
    }
  }
  return report;
}

CrossCheckReport cross_check(const Diagram& d) {
  CrossCheckReport report;
  const int c = d.crossing_count();
  report.crossings = c;
  report.n_traversal = d.component_count();

  const IncidenceMatrix im = incidence_matrix(d);
  report.rank = static_cast<int>(gf2::rank(im.matrix));
  report.n_rank = c - report.rank + 1;
  if (report.n_rank != report.n_traversal) {
    fail(d, "component count by traversal (" + std::to_string(report.n_traversal) + ") differs from c - rank + 1 (" +
                std::to_string(report.n_rank) + ")");
  }

  const auto parity = audit_region_parity(d);
  if (!parity.ok()) {
    const auto& v = parity.violations.front();
    fail(d, "region " + std::to_string(v.region + 1) + " has an odd number (" + std::to_string(v.count) +
                ") of crossings between component " + std::to_string(v.component + 1) + " and the others");
  }

  const auto check_target = [&](const CrossingSet& t, const AchievableSet* reachable) {
    const bool member = gf2::in_row_space(im.matrix, t);
    if (achievable(d, t) != member) fail(d, "parity criterion disagrees with row-space membership for " + t.to_string());
    const auto witness = gf2::solve_row_combination(im.matrix, t);
    if (witness.has_value() != member) fail(d, "solver disagrees with row-space membership for " + t.to_string());
    if (witness && gf2::row_combination(*witness, im.matrix) != t) fail(d, "solver witness does not reproduce " + t.to_string());
    if (reachable != nullptr && reachable->contains(t) != member) {
      fail(d, "brute-force reachability disagrees with row-space membership for " + t.to_string());
    }
    ++report.targets_checked;
  };

  if (d.region_count() <= kMaxEnumeratedRegions) {
    report.enumerated = true;
    const AchievableSet reachable = enumerate_achievable(d);
    if (reachable.size() != (std::size_t{1} << report.rank) ||
        reachable.size() != (std::size_t{1} << (c - report.n_traversal + 1))) {
      fail(d, "reachable set has " + std::to_string(reachable.size()) + " elements, expected 2^" +
                  std::to_string(report.rank));
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << c); ++mask) check_target(from_mask(mask, c), &reachable);
  } else {
    for (int p = 0; p < c; ++p) {
      for (int q = p; q < c; ++q) {
        CrossingSet t(c);
        t.set(p);
        if (q != p) t.set(q);
        check_target(t, nullptr);
      }
    }
  }
  return report;
}

PlaneGraph random_plane_graph(std::mt19937_64& rng, int edges) {
  if (edges < 1) throw Error(ErrorCode::IndexMismatch, "a plane graph needs at least one edge");
  const auto below = [&rng](std::uint64_t n) { return static_cast<int>(rng() % n); };

  const int vertices = 1 + below(static_cast<std::uint64_t>(edges) + 1);
  std::vector<PlaneGraph::Edge> edge_list;
  std::vector<std::vector<int>> rotation(vertices);
  const auto new_edge = [&](int tail, int head) {
    edge_list.push_back({tail, head, below(2) == 0 ? 1 : -1});
    return static_cast<int>(edge_list.size()) - 1;
  };

  for (int v = 1; v < vertices; ++v) {
    const int parent = below(static_cast<std::uint64_t>(v));
    const int e = new_edge(parent, v);
    auto& rot = rotation[parent];
    rot.insert(rot.begin() + below(rot.size() + 1), 2 * e);
    rotation[v].push_back(2 * e + 1);
  }

  const auto vertex_of = [&](int dart) { return dart % 2 == 0 ? edge_list[dart / 2].tail : edge_list[dart / 2].head; };
  while (static_cast<int>(edge_list.size()) < edges) {
    if (edge_list.empty()) {
      const int e = new_edge(0, 0);
      rotation[0] = {2 * e, 2 * e + 1};
      continue;
    }
    const int darts = 2 * static_cast<int>(edge_list.size());
    std::vector<int> next(darts);
    for (const auto& rot : rotation) {
      for (std::size_t k = 0; k < rot.size(); ++k) next[rot[k]] = rot[(k + 1) % rot.size()];
    }
    // Two corners of one face; the new edge splits that face.
    const int first = below(static_cast<std::uint64_t>(darts));
    std::vector<int> face;
    for (int corner = first;;) {
      face.push_back(corner);
      corner = next[corner] ^ 1;
      if (corner == first) break;
    }
    const int second = face[below(face.size())];
    const int tail = vertex_of(first);
    const int head = vertex_of(second);
    const int e = new_edge(tail, head);
    const auto insert_after = [&](int v, int anchor, int dart) {
      auto& rot = rotation[v];
      rot.insert(std::find(rot.begin(), rot.end(), anchor) + 1, dart);
    };
    insert_after(tail, first, 2 * e);
    insert_after(head, second == first ? 2 * e : second, 2 * e + 1);
  }
  return PlaneGraph(vertices, std::move(edge_list), std::move(rotation));
}

Diagram random_diagram(std::mt19937_64& rng, int max_crossings) {
  const int edges = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_crossings));
  return medial_diagram(random_plane_graph(rng, edges));
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TrialRecord run_trial(std::uint64_t base_seed, std::uint64_t index, int max_crossings) {
  TrialRecord record;
  record.trial = index;
  record.seed = trial_seed(base_seed, index);
  std::mt19937_64 rng(record.seed);
  const Diagram d = random_diagram(rng, max_crossings);
  record.crossings = d.crossing_count();
  record.n_traversal = d.component_count();
  try {
    const CrossCheckReport report = cross_check(d);
    record.n_rank = report.n_rank;
    record.rank = report.rank;
    record.enumerated = report.enumerated;
    record.pass = true;
  } catch (const Error& e) {
    record.rank = static_cast<int>(incidence_rank(d));
    record.n_rank = record.crossings - record.rank + 1;
    record.failure = e.what();
    record.pass = false;
  }
  return record;
}

}  // namespace rcc::oracle
