#pragma once

#include <optional>
#include <vector>

#include "rcc/diagram.hpp"
#include "rcc/gf2.hpp"
#include "rcc/tait.hpp"

namespace rcc {

/// Bits indexed by crossing id: the crossings to change.
using CrossingSet = gf2::BitVector;
/// Bits indexed by region id: the regions at which to perform a region
/// crossing change.
using RegionSet = gf2::BitVector;

/// The (c+2) x c region/crossing incidence matrix, black rows (Tait graph)
/// stacked over white rows (dual graph).
struct IncidenceMatrix {
  gf2::BitMatrix matrix;
  std::vector<int> region_of_row;
  std::vector<int> row_of_region;
  int black_rows = 0;

  /// Rows selected by a RegionSet, in matrix row order.
  gf2::BitVector rows_of(const RegionSet& regions) const;
  RegionSet regions_of(const gf2::BitVector& rows) const;
};

IncidenceMatrix incidence_matrix(const Diagram& d);
IncidenceMatrix incidence_matrix(const Diagram& d, const Checkerboard& cb);

/// Crossings changed by performing region crossing changes at r.
CrossingSet flipped_crossings(const Diagram& d, const RegionSet& regions);
Diagram apply_rcc(const Diagram& d, const RegionSet& regions);

/// A region set realizing exactly the target crossing changes, if any.
std::optional<RegionSet> solve_regions(const Diagram& d, const CrossingSet& target);

/// Parity criterion: every component meets an even number of targeted
/// crossings shared with other components.
bool achievable(const Diagram& d, const CrossingSet& target);
/// Components at which the parity criterion fails (empty when achievable).
std::vector<int> parity_violations(const Diagram& d, const CrossingSet& target);

/// c - rank(M(D)) + 1.
int component_count(const Diagram& d);
std::size_t incidence_rank(const Diagram& d);

bool is_knot_graph(const PlaneGraph& g);
bool even_degree_test(const PlaneGraph& g);

/// Crossings to change so that, traversing components in `order` from
/// their basepoint arcs, every crossing is first met on the over-strand.
CrossingSet descending_target(const Diagram& d, const std::vector<int>& order, const std::vector<int>& basepoints);
/// Components by id, basepoint = lowest arc label of each component.
CrossingSet descending_target(const Diagram& d);
bool is_descending(const Diagram& d, const std::vector<int>& order, const std::vector<int>& basepoints);
bool is_descending(const Diagram& d);

/// Sum over j != i of lk(K_i, K_j), mod 2, per component i.
std::vector<int> linking_parity_row_sums(const Diagram& d);

bool unknottable_by_rcc(const Diagram& d);

/// A region set turning the diagram into a descending one.
std::optional<RegionSet> unknot_plan(const Diagram& d);

}  // namespace rcc
