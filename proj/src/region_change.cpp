#include "rcc/region_change.hpp"

#include <algorithm>
#include <cstdlib>

#include "rcc/error.hpp"

namespace rcc {

gf2::BitVector IncidenceMatrix::rows_of(const RegionSet& regions) const {
  if (regions.size() != region_of_row.size()) {
    throw Error(ErrorCode::IndexMismatch, "region set length must equal the region count");
  }
  gf2::BitVector rows(region_of_row.size());
  for (std::size_t region : regions.ones()) rows.set(row_of_region[region]);
  return rows;
}

RegionSet IncidenceMatrix::regions_of(const gf2::BitVector& rows) const {
  RegionSet regions(region_of_row.size());
  for (std::size_t row : rows.ones()) regions.set(region_of_row[row]);
  return regions;
}

IncidenceMatrix incidence_matrix(const Diagram& d, const Checkerboard& cb) {
  IncidenceMatrix im;
  const int regions = d.region_count();
  for (Color pass : {Color::Black, Color::White}) {
    for (int f = 0; f < regions; ++f) {
      if (cb.color_of[f] == pass) im.region_of_row.push_back(f);
    }
    if (pass == Color::Black) im.black_rows = static_cast<int>(im.region_of_row.size());
  }
  im.row_of_region.assign(regions, -1);
  im.matrix = gf2::BitMatrix(regions, d.crossing_count());
  for (int row = 0; row < regions; ++row) {
    const int f = im.region_of_row[row];
    im.row_of_region[f] = row;
    for (int p : d.regions()[f].boundary_crossings) im.matrix.set(row, p);
  }
  return im;
}

IncidenceMatrix incidence_matrix(const Diagram& d) { return incidence_matrix(d, checkerboard(d)); }

CrossingSet flipped_crossings(const Diagram& d, const RegionSet& regions) {
  if (regions.size() != static_cast<std::size_t>(d.region_count())) {
    throw Error(ErrorCode::IndexMismatch, "region set length must equal c + 2");
  }
  CrossingSet flips(d.crossing_count());
  for (std::size_t f : regions.ones()) {
    for (int p : d.regions()[f].boundary_crossings) flips.flip(p);
  }
  return flips;
}

Diagram apply_rcc(const Diagram& d, const RegionSet& regions) {
  return d.with_crossing_changes(flipped_crossings(d, regions));
}

std::optional<RegionSet> solve_regions(const Diagram& d, const CrossingSet& target) {
  if (target.size() != static_cast<std::size_t>(d.crossing_count())) {
    throw Error(ErrorCode::IndexMismatch, "target length must equal the crossing count");
  }
  const IncidenceMatrix im = incidence_matrix(d);
  const auto rows = gf2::solve_row_combination(im.matrix, target);
  if (!rows) return std::nullopt;
  return im.regions_of(*rows);
}

std::vector<int> parity_violations(const Diagram& d, const CrossingSet& target) {
  if (target.size() != static_cast<std::size_t>(d.crossing_count())) {
    throw Error(ErrorCode::IndexMismatch, "target length must equal the crossing count");
  }
  std::vector<int> count(d.component_count(), 0);
  for (std::size_t p : target.ones()) {
    const auto [under, over] = d.strand_components(static_cast<int>(p));
    if (under != over) {
      ++count[under];
      ++count[over];
    }
  }
  std::vector<int> odd;
  for (int i = 0; i < d.component_count(); ++i) {
    if (count[i] % 2 != 0) odd.push_back(i);
  }
  return odd;
}

bool achievable(const Diagram& d, const CrossingSet& target) { return parity_violations(d, target).empty(); }

std::size_t incidence_rank(const Diagram& d) { return gf2::rank(incidence_matrix(d).matrix); }

int component_count(const Diagram& d) { return d.crossing_count() - static_cast<int>(incidence_rank(d)) + 1; }

bool is_knot_graph(const PlaneGraph& g) {
  return incidence_rank(medial_diagram(g)) == static_cast<std::size_t>(g.edge_count());
}

bool even_degree_test(const PlaneGraph& g) {
  const auto all_even = [](const PlaneGraph& h) {
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (h.degree(v) % 2 != 0) return false;
    }
    return true;
  };
  return all_even(g) && all_even(dual(g));
}

namespace {

void check_traversal_plan(const Diagram& d, const std::vector<int>& order, const std::vector<int>& basepoints) {
  const int n = d.component_count();
  if (static_cast<int>(order.size()) != n || static_cast<int>(basepoints.size()) != n) {
    throw Error(ErrorCode::IndexMismatch, "order and basepoints need one entry per component");
  }
  std::vector<char> used(n, 0);
  for (int i : order) {
    if (i < 0 || i >= n || used[i]) throw Error(ErrorCode::IndexMismatch, "order is not a permutation of the components");
    used[i] = 1;
  }
  for (int i = 0; i < n; ++i) {
    const auto& arcs = d.components()[i].arcs;
    if (std::find(arcs.begin(), arcs.end(), basepoints[i]) == arcs.end()) {
      throw Error(ErrorCode::IndexMismatch, "basepoint arc does not belong to its component");
    }
  }
}

std::vector<int> default_basepoints(const Diagram& d) {
  std::vector<int> base;
  for (const Component& comp : d.components()) base.push_back(*std::min_element(comp.arcs.begin(), comp.arcs.end()));
  return base;
}

std::vector<int> identity_order(const Diagram& d) {
  std::vector<int> order(d.component_count());
  for (int i = 0; i < d.component_count(); ++i) order[i] = i;
  return order;
}

}  // namespace

CrossingSet descending_target(const Diagram& d, const std::vector<int>& order, const std::vector<int>& basepoints) {
  check_traversal_plan(d, order, basepoints);
  CrossingSet target(d.crossing_count());
  std::vector<char> met(d.crossing_count(), 0);
  for (int i : order) {
    const Component& comp = d.components()[i];
    const std::size_t len = comp.darts.size();
    const std::size_t start = std::find(comp.arcs.begin(), comp.arcs.end(), basepoints[i]) - comp.arcs.begin();
    for (std::size_t s = 0; s < len; ++s) {
      const int in = d.mate(comp.darts[(start + s) % len]);
      const int p = crossing_of(in);
      if (met[p]) continue;
      met[p] = 1;
      if (d.is_under(in)) target.set(p);
    }
  }
  return target;
}

CrossingSet descending_target(const Diagram& d) { return descending_target(d, identity_order(d), default_basepoints(d)); }

bool is_descending(const Diagram& d, const std::vector<int>& order, const std::vector<int>& basepoints) {
  return descending_target(d, order, basepoints).none();
}

bool is_descending(const Diagram& d) { return descending_target(d).none(); }

std::vector<int> linking_parity_row_sums(const Diagram& d) {
  const int n = d.component_count();
  std::vector<int> sums(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) sums[i] += std::abs(d.linking_number(i, j));
    }
    sums[i] %= 2;
  }
  return sums;
}

bool unknottable_by_rcc(const Diagram& d) {
  switch (d.component_count()) {
    case 1:
      return true;
    case 2:
      return d.linking_number(0, 1) % 2 == 0;
    default: {
      const auto sums = linking_parity_row_sums(d);
      return std::all_of(sums.begin(), sums.end(), [](int s) { return s == 0; });
    }
  }
}

std::optional<RegionSet> unknot_plan(const Diagram& d) { return solve_regions(d, descending_target(d)); }

}  // namespace rcc
