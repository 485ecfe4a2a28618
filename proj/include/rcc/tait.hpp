#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rcc/diagram.hpp"

namespace rcc {

enum class Color : std::uint8_t { White, Black };

struct Checkerboard {
  std::vector<Color> color_of;  // indexed by region id

  int black_count() const;
  int white_count() const;
};

/// Proper 2-coloring of the faces with the unbounded face white.
Checkerboard checkerboard(const Diagram& d);

/// Connected plane multigraph with signed edges and a rotation system.
///
/// Edge e has darts 2e (at tail) and 2e+1 (at head). rotation[v] lists the
/// darts at v in counterclockwise order. Self-loops and parallel edges are
/// allowed.
class PlaneGraph {
 public:
  struct Edge {
    int tail = 0;
    int head = 0;
    int sign = 1;
  };

  PlaneGraph() = default;
  /// Validates dart bookkeeping, connectivity and planarity (V - E + F = 2).
  PlaneGraph(int vertex_count, std::vector<Edge> edges, std::vector<std::vector<int>> rotation);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }

  static constexpr int edge_of(int dart) { return dart / 2; }
  static constexpr int reverse(int dart) { return dart ^ 1; }
  int vertex_of(int dart) const { return dart % 2 == 0 ? edges_[dart / 2].tail : edges_[dart / 2].head; }
  /// Counterclockwise successor of a dart around its vertex.
  int next_ccw(int dart) const;
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

  /// Faces as orbits of corners; corner d is the sector between d and
  /// next_ccw(d). Returns face id per dart/corner.
  std::vector<int> face_of_corner(int* face_count = nullptr) const;
  int face_count() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> next_;
};

/// Vertices are black regions (ascending id), edge p is crossing p.
PlaneGraph tait_graph(const Diagram& d, const Checkerboard& cb);
PlaneGraph tait_graph(const Diagram& d);

/// Planar dual; edge e of the dual crosses edge e of g.
PlaneGraph dual(const PlaneGraph& g);

/// The medial link diagram: crossing e sits on edge e, over/under from the
/// edge sign, and the faces around g's vertices are black.
Diagram medial_diagram(const PlaneGraph& g);

/// Isomorphism fixing edge ids and signs and preserving rotation systems.
bool isomorphic(const PlaneGraph& a, const PlaneGraph& b);

/// Plane-graph text format:
///   V n
///   R v d1 d2 ... dk    (counterclockwise; +e is the v_a end of edge e, -e the v_b end)
///   E e v_a v_b sign
/// Vertices and edges are 1-based; `#` starts a comment.
PlaneGraph parse_plane_graph(std::string_view text);
std::string format_plane_graph(const PlaneGraph& g);

/// Graphviz export; edges are labelled with crossing id and sign.
std::string to_dot(const PlaneGraph& g, std::string_view name);

}  // namespace rcc
