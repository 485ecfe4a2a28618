#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcc/gf2.hpp"

namespace rcc {

/// Planar diagram code: one 4-tuple of arc labels per crossing, listed
/// counterclockwise starting from the incoming under-strand.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;
};

/// Syntax-only parse of the PD file format: `X a b c d` per line, `#`
/// comments, blank lines ignored.
PdCode parse_pd_code(std::string_view text);
std::string format_pd_code(const PdCode& pd);

/// A face of the diagram. boundary_crossings is a set: a crossing that
/// touches the face at two corners is listed once.
struct Region {
  int id = 0;
  std::vector<int> boundary_crossings;
  std::vector<int> corners;
};

/// One closed strand. arcs[k] is the label of the arc leaving through
/// darts[k]; both follow the component's orientation.
struct Component {
  int id = 0;
  std::vector<int> arcs;
  std::vector<int> darts;
};

/// A connected link diagram stored as a combinatorial map.
///
/// Crossing p owns darts 4p..4p+3 in counterclockwise order. Each arc joins
/// two darts (mate). Strands pass straight through: dart k continues at
/// dart k+2 (mod 4). The corner k of a crossing is the sector between
/// darts k and k+1; faces are the orbits of corner k -> mate(k+1).
class Diagram {
 public:
  /// Raw combinatorial data. Validated by from_layout.
  struct Layout {
    std::vector<int> mate;               // 4c entries, an involution without fixed points
    std::vector<std::uint8_t> under_axis;  // per crossing: 0 if darts {0,2} carry the under-strand, 1 for {1,3}
    std::vector<std::uint8_t> outgoing;    // per dart: 1 if the strand leaves the crossing there
    std::vector<int> arc_label;          // per dart, shared by mates
    int outer_corner = 0;                // any corner of the unbounded face
  };

  static Diagram from_layout(Layout layout);
  static Diagram from_pd(const PdCode& pd);

  int crossing_count() const { return static_cast<int>(layout_.under_axis.size()); }
  int region_count() const { return static_cast<int>(regions_.size()); }
  int component_count() const { return static_cast<int>(components_.size()); }

  const std::vector<Region>& regions() const { return regions_; }
  const std::vector<Component>& components() const { return components_; }
  const Layout& layout() const { return layout_; }

  int outer_region() const { return face_of_corner_[layout_.outer_corner]; }
  int face_of_corner(int corner) const { return face_of_corner_[corner]; }
  int component_of_dart(int dart) const { return component_of_dart_[dart]; }

  int mate(int dart) const { return layout_.mate[dart]; }
  bool is_under(int dart) const { return (dart % 4) % 2 == layout_.under_axis[dart / 4]; }
  bool is_outgoing(int dart) const { return layout_.outgoing[dart] != 0; }
  int arc_label(int dart) const { return layout_.arc_label[dart]; }

  /// Components of the under- and over-strand at crossing p.
  std::pair<int, int> strand_components(int crossing) const;
  bool is_self_crossing(int crossing) const;

  /// +1 iff the under-strand direction turned a quarter counterclockwise
  /// points along the over-strand.
  int crossing_sign(int crossing) const;
  int linking_number(int i, int j) const;

  Diagram with_crossing_changes(const gf2::BitVector& crossings) const;
  Diagram mirror() const;

  PdCode to_pd() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.layout_.mate == b.layout_.mate && a.layout_.under_axis == b.layout_.under_axis &&
           a.layout_.outgoing == b.layout_.outgoing && a.layout_.arc_label == b.layout_.arc_label &&
           a.outer_region() == b.outer_region();
  }

 private:
  explicit Diagram(Layout layout);
  void build_faces();
  void build_components();

  Layout layout_;
  std::vector<Region> regions_;
  std::vector<int> face_of_corner_;
  std::vector<Component> components_;
  std::vector<int> component_of_dart_;
};

inline constexpr int crossing_of(int dart) { return dart / 4; }
inline constexpr int opposite_dart(int dart) { return dart - dart % 4 + (dart % 4 + 2) % 4; }
inline constexpr int next_ccw(int dart) { return dart - dart % 4 + (dart % 4 + 1) % 4; }

Diagram parse_pd(std::string_view text);

const std::vector<Region>& faces(const Diagram& d);
const std::vector<Component>& components(const Diagram& d);
int crossing_sign(const Diagram& d, int crossing);
int linking_number(const Diagram& d, int i, int j);

}  // namespace rcc
