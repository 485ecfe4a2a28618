#include <doctest.h>

#include <random>

#include "rcc/error.hpp"
#include "rcc/oracle.hpp"
#include "rcc/tait.hpp"
#include "support.hpp"

using rcc::Color;
using rcc::PlaneGraph;

namespace {

int self_loops(const PlaneGraph& g) {
  int k = 0;
  for (const auto& e : g.edges()) k += e.tail == e.head;
  return k;
}

std::vector<int> sorted_degrees(const PlaneGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Faces on the two sides of every arc get different colors.
bool proper_coloring(const rcc::Diagram& d, const rcc::Checkerboard& cb) {
  for (int corner = 0; corner < 4 * d.crossing_count(); ++corner) {
    const int across = corner - corner % 4 + (corner % 4 + 1) % 4;
    if (cb.color_of[d.face_of_corner(corner)] == cb.color_of[d.face_of_corner(across)]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("checkerboard colorings") {
  const rcc::Diagram hopf = rcc::test::load_pd("hopf.pd");
  const auto cb = rcc::checkerboard(hopf);
  CHECK(cb.black_count() == 2);
  CHECK(cb.white_count() == 2);
  CHECK(cb.color_of[hopf.outer_region()] == Color::White);

  const rcc::Diagram unknot = rcc::test::load_pd("unknot1.pd");
  const auto cu = rcc::checkerboard(unknot);
  CHECK(cu.color_of[unknot.outer_region()] == Color::White);
  CHECK(cu.white_count() == 1);
  CHECK(cu.black_count() == 2);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const rcc::Diagram d = rcc::oracle::random_diagram(rng, 12);
    const auto c = rcc::checkerboard(d);
    CHECK(c.black_count() + c.white_count() == d.crossing_count() + 2);
    CHECK(c.color_of[d.outer_region()] == Color::White);
    CHECK(proper_coloring(d, c));
  }
}

TEST_CASE("Tait graphs of the fixtures") {
  const PlaneGraph hopf = rcc::tait_graph(rcc::test::load_pd("hopf.pd"));
  CHECK(hopf.vertex_count() == 2);
  CHECK(hopf.edge_count() == 2);
  CHECK(self_loops(hopf) == 0);
  const PlaneGraph hopf_dual = rcc::dual(hopf);
  CHECK(hopf_dual.vertex_count() == 2);
  CHECK(hopf_dual.edge_count() == 2);
  CHECK(self_loops(hopf_dual) == 0);

  const PlaneGraph unknot = rcc::tait_graph(rcc::test::load_pd("unknot1.pd"));
  CHECK(unknot.vertex_count() == 2);
  CHECK(unknot.edge_count() == 1);
  CHECK(self_loops(unknot) == 0);

  const PlaneGraph trefoil = rcc::tait_graph(rcc::test::load_pd("trefoil.pd"));
  CHECK(trefoil.vertex_count() == 3);
  CHECK(sorted_degrees(trefoil) == std::vector<int>{2, 2, 2});
  CHECK(rcc::isomorphic(trefoil, rcc::test::load_graph("triangle.graph")));
  const PlaneGraph theta = rcc::dual(trefoil);
  CHECK(theta.vertex_count() == 2);
  CHECK(sorted_degrees(theta) == std::vector<int>{3, 3});
}

TEST_CASE("Tait graph edges carry the crossing structure") {
  const rcc::Diagram d = rcc::test::load_pd("trefoil_kink.pd");
  const auto cb = rcc::checkerboard(d);
  const PlaneGraph g = rcc::tait_graph(d, cb);
  CHECK(g.vertex_count() == cb.black_count());
  CHECK(g.edge_count() == d.crossing_count());
  CHECK(rcc::dual(g).vertex_count() == cb.white_count());
  CHECK(g.face_count() == cb.white_count());
}

TEST_CASE("dual examples") {
  const PlaneGraph loop = rcc::parse_plane_graph("V 1\nE 1 1 1 +1\nR 1 +1 -1\n");
  const PlaneGraph d = rcc::dual(loop);
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 1);
  CHECK(self_loops(d) == 0);
  CHECK(d.edges()[0].sign == -1);

  const PlaneGraph single = rcc::test::load_graph("single_edge.graph");
  const PlaneGraph ds = rcc::dual(single);
  CHECK(ds.vertex_count() == 1);
  CHECK(self_loops(ds) == 1);
}

TEST_CASE("dual is an involution and swaps degree and face size") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const PlaneGraph g = rcc::oracle::random_plane_graph(rng, 1 + static_cast<int>(rng() % 14));
    const PlaneGraph h = rcc::dual(g);
    CHECK(h.vertex_count() == g.face_count());
    CHECK(h.face_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) CHECK(h.edges()[e].sign == -g.edges()[e].sign);
    CHECK(rcc::isomorphic(rcc::dual(h), g));
  }
}

TEST_CASE("medial diagrams") {
  const rcc::Diagram c4 = rcc::medial_diagram(rcc::test::load_graph("c4.graph"));
  CHECK(c4.crossing_count() == 4);
  CHECK(c4.component_count() == 2);
  CHECK(rcc::test::pd_component_count(c4.to_pd()) == 2);

  const rcc::Diagram one = rcc::medial_diagram(rcc::test::load_graph("single_edge.graph"));
  CHECK(one.crossing_count() == 1);
  CHECK(one.region_count() == 3);
  CHECK(one.component_count() == 1);

  const rcc::Diagram trefoil = rcc::test::load_pd("trefoil.pd");
  const rcc::Diagram back = rcc::medial_diagram(rcc::tait_graph(trefoil));
  CHECK(back.crossing_count() == 3);
  CHECK(back.component_count() == 1);
  CHECK(rcc::isomorphic(rcc::tait_graph(back), rcc::tait_graph(trefoil)));

  const rcc::Diagram path = rcc::medial_diagram(rcc::test::load_graph("path2.graph"));
  CHECK(path.component_count() == 1);
  CHECK(path.crossing_count() == 2);
}

TEST_CASE("medial then Tait graph recovers the graph") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const PlaneGraph g = rcc::oracle::random_plane_graph(rng, 1 + static_cast<int>(rng() % 14));
    const rcc::Diagram d = rcc::medial_diagram(g);
    CHECK(d.crossing_count() == g.edge_count());
    CHECK(d.region_count() == g.vertex_count() + g.face_count());
    CHECK(rcc::isomorphic(rcc::tait_graph(d), g));
  }
}

TEST_CASE("isomorphism respects signs and rotations") {
  const PlaneGraph c4 = rcc::test::load_graph("c4.graph");
  CHECK(rcc::isomorphic(c4, c4));
  const PlaneGraph flipped = rcc::parse_plane_graph(
      "V 4\nE 1 1 2 -1\nE 2 2 3 +1\nE 3 3 4 +1\nE 4 4 1 +1\n"
      "R 1 +1 -4\nR 2 +2 -1\nR 3 +3 -2\nR 4 +4 -3\n");
  CHECK_FALSE(rcc::isomorphic(c4, flipped));
  const PlaneGraph k4 = rcc::test::load_graph("k4_twisted.graph");
  CHECK_FALSE(rcc::isomorphic(c4, k4));
}

TEST_CASE("plane graph text format") {
  const PlaneGraph k4 = rcc::test::load_graph("k4_twisted.graph");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.face_count() == 4);
  const std::string text = rcc::format_plane_graph(k4);
  const PlaneGraph again = rcc::parse_plane_graph(text);
  CHECK(rcc::format_plane_graph(again) == text);
  CHECK(rcc::isomorphic(again, k4));

  const PlaneGraph short_signs = rcc::parse_plane_graph("V 2\nE 1 1 2 -\nR 1 +1\nR 2 -1\n");
  CHECK(short_signs.edges()[0].sign == -1);
}

TEST_CASE("plane graph errors") {
  const auto code_of = [](const std::string& text) {
    try {
      (void)rcc::parse_plane_graph(text);
    } catch (const rcc::Error& e) {
      return e.code();
    }
    return rcc::ErrorCode::CheckFailed;
  };
  CHECK(code_of(rcc::test::load_graph_text("nonplanar.graph")) == rcc::ErrorCode::NonPlanar);
  CHECK(code_of("") == rcc::ErrorCode::Malformed);
  CHECK(code_of("V 2\nE 1 1 2 +1\nR 1 +1\n") == rcc::ErrorCode::Malformed);
  CHECK(code_of("V 2\nE 1 1 2 +1\nR 1 +1\nR 2 +1\n") == rcc::ErrorCode::Malformed);
  CHECK(code_of("V 2\nE 1 1 3 +1\nR 1 +1\nR 2 -1\n") == rcc::ErrorCode::Malformed);
  CHECK(code_of("V 2\nE 1 1 2 +2\nR 1 +1\nR 2 -1\n") == rcc::ErrorCode::Malformed);
  CHECK(code_of("V 3\nE 1 1 2 +1\nR 1 +1\nR 2 -1\nR 3\n") == rcc::ErrorCode::Disconnected);
}

TEST_CASE("DOT export labels crossings and signs") {
  const std::string dot = rcc::to_dot(rcc::test::load_graph("k4_twisted.graph"), "G");
  CHECK(dot.find("graph G {") != std::string::npos);
  CHECK(dot.find("P1 +") != std::string::npos);
  CHECK(dot.find("P6 -") != std::string::npos);
}
