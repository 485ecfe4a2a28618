#include "rcc/tait.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "rcc/error.hpp"

namespace rcc {

int Checkerboard::black_count() const {
  return static_cast<int>(std::count(color_of.begin(), color_of.end(), Color::Black));
}

int Checkerboard::white_count() const { return static_cast<int>(color_of.size()) - black_count(); }

Checkerboard checkerboard(const Diagram& d) {
  const int faces = d.region_count();
  std::vector<int> color(faces, -1);
  std::deque<int> queue{d.outer_region()};
  color[d.outer_region()] = 0;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int corner : d.regions()[f].corners) {
      // Corners k+1 and k-1 lie across an arc from corner k.
      const int neighbours[2] = {next_ccw(corner), opposite_dart(next_ccw(corner))};
      for (int n : neighbours) {
        const int g = d.face_of_corner(n);
        if (color[g] < 0) {
          color[g] = 1 - color[f];
          queue.push_back(g);
        } else if (color[g] == color[f]) {
          throw Error(ErrorCode::InternalInconsistency, "adjacent faces received the same color");
        }
      }
    }
  }
  Checkerboard cb;
  cb.color_of.reserve(faces);
  for (int c : color) {
    if (c < 0) throw Error(ErrorCode::InternalInconsistency, "face unreachable while coloring");
    cb.color_of.push_back(c == 1 ? Color::Black : Color::White);
  }
  return cb;
}

PlaneGraph::PlaneGraph(int vertex_count, std::vector<Edge> edges, std::vector<std::vector<int>> rotation)
    : edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (vertex_count < 1 || static_cast<int>(rotation_.size()) != vertex_count) {
    throw Error(ErrorCode::Malformed, "rotation system must list every vertex");
  }
  if (edges_.empty()) throw Error(ErrorCode::Malformed, "graph needs at least one edge");
  const int darts = 2 * edge_count();
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count) {
      throw Error(ErrorCode::Malformed, "edge endpoint out of range");
    }
    if (e.sign != 1 && e.sign != -1) throw Error(ErrorCode::Malformed, "edge sign must be +1 or -1");
  }
  next_.assign(darts, -1);
  std::vector<int> seen(darts, 0);
  for (int v = 0; v < vertex_count; ++v) {
    const auto& rot = rotation_[v];
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const int dart = rot[k];
      if (dart < 0 || dart >= darts) throw Error(ErrorCode::Malformed, "dart out of range in rotation");
      if (vertex_of(dart) != v) throw Error(ErrorCode::Malformed, "dart listed at the wrong vertex");
      if (seen[dart]++) throw Error(ErrorCode::Malformed, "dart listed twice in rotation");
      next_[dart] = rot[(k + 1) % rot.size()];
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) throw Error(ErrorCode::Malformed, "rotation system misses a dart");

  std::vector<char> reached(vertex_count, 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int dart : rotation_[v]) {
      const int w = vertex_of(reverse(dart));
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != vertex_count) throw Error(ErrorCode::Disconnected, "plane graph is not connected");
  if (vertex_count - edge_count() + face_count() != 2) {
    throw Error(ErrorCode::NonPlanar, "rotation system is not a plane embedding (V - E + F != 2)");
  }
}

int PlaneGraph::next_ccw(int dart) const { return next_[dart]; }

std::vector<int> PlaneGraph::face_of_corner(int* face_count) const {
  std::vector<int> face(2 * edge_count(), -1);
  int faces = 0;
  for (int start = 0; start < static_cast<int>(face.size()); ++start) {
    if (face[start] >= 0) continue;
    for (int corner = start; face[corner] < 0; corner = reverse(next_[corner])) face[corner] = faces;
    ++faces;
  }
  if (face_count != nullptr) *face_count = faces;
  return face;
}

int PlaneGraph::face_count() const {
  int faces = 0;
  face_of_corner(&faces);
  return faces;
}

namespace {

// Counterclockwise corner order around a face: the face orbit runs
// clockwise around the face interior, so reverse it.
template <typename Step>
std::vector<int> ccw_corners(int start, Step step) {
  std::vector<int> orbit;
  int corner = start;
  do {
    orbit.push_back(corner);
    corner = step(corner);
  } while (corner != start);
  std::reverse(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

PlaneGraph tait_graph(const Diagram& d, const Checkerboard& cb) {
  std::vector<int> vertex_of_face(d.region_count(), -1);
  int vertices = 0;
  for (int f = 0; f < d.region_count(); ++f) {
    if (cb.color_of[f] == Color::Black) vertex_of_face[f] = vertices++;
  }
  const int c = d.crossing_count();
  std::vector<PlaneGraph::Edge> edges(c);
  std::vector<int> dart_of_corner(4 * c, -1);
  for (int p = 0; p < c; ++p) {
    const int k = cb.color_of[d.face_of_corner(4 * p)] == Color::Black ? 0 : 1;
    const int tail_corner = 4 * p + k;
    const int head_corner = 4 * p + k + 2;
    if (cb.color_of[d.face_of_corner(head_corner)] != Color::Black) {
      throw Error(ErrorCode::InternalInconsistency, "opposite corners at a crossing differ in color");
    }
    edges[p].tail = vertex_of_face[d.face_of_corner(tail_corner)];
    edges[p].head = vertex_of_face[d.face_of_corner(head_corner)];
    // +1 when the over-strand lies to the right as seen from the black corner.
    edges[p].sign = d.layout().under_axis[p] == k ? 1 : -1;
    dart_of_corner[tail_corner] = 2 * p;
    dart_of_corner[head_corner] = 2 * p + 1;
  }
  std::vector<std::vector<int>> rotation(vertices);
  for (int f = 0; f < d.region_count(); ++f) {
    if (vertex_of_face[f] < 0) continue;
    const auto corners = ccw_corners(d.regions()[f].corners.front(), [&](int x) { return d.mate(next_ccw(x)); });
    for (int corner : corners) rotation[vertex_of_face[f]].push_back(dart_of_corner[corner]);
  }
  return PlaneGraph(vertices, std::move(edges), std::move(rotation));
}

PlaneGraph tait_graph(const Diagram& d) { return tait_graph(d, checkerboard(d)); }

PlaneGraph dual(const PlaneGraph& g) {
  int faces = 0;
  const std::vector<int> face = g.face_of_corner(&faces);
  std::vector<PlaneGraph::Edge> edges(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    edges[e].tail = face[2 * e];
    edges[e].head = face[2 * e + 1];
    edges[e].sign = -g.edges()[e].sign;
  }
  std::vector<int> first_corner(faces, -1);
  for (int x = static_cast<int>(face.size()) - 1; x >= 0; --x) first_corner[face[x]] = x;
  std::vector<std::vector<int>> rotation(faces);
  for (int f = 0; f < faces; ++f) {
    rotation[f] = ccw_corners(first_corner[f], [&](int x) { return PlaneGraph::reverse(g.next_ccw(x)); });
  }
  return PlaneGraph(faces, std::move(edges), std::move(rotation));
}

Diagram medial_diagram(const PlaneGraph& g) {
  const int c = g.edge_count();
  // Crossing e: darts 0,1 flank the tail end of edge e, darts 2,3 the head
  // end. Corner 0 faces the tail vertex, corner 2 the head vertex.
  const auto ccw_side = [](int dart) { return 4 * (dart / 2) + (dart % 2 == 0 ? 0 : 2); };
  const auto cw_side = [](int dart) { return 4 * (dart / 2) + (dart % 2 == 0 ? 1 : 3); };

  Diagram::Layout layout;
  layout.mate.assign(4 * c, -1);
  for (const auto& rot : g.rotation()) {
    for (int dart : rot) {
      const int a = ccw_side(dart);
      const int b = cw_side(g.next_ccw(dart));
      layout.mate[a] = b;
      layout.mate[b] = a;
    }
  }
  layout.under_axis.resize(c);
  for (int e = 0; e < c; ++e) layout.under_axis[e] = g.edges()[e].sign > 0 ? 0 : 1;

  layout.outgoing.assign(4 * c, 0);
  layout.arc_label.assign(4 * c, 0);
  std::vector<char> seen(4 * c, 0);
  int label = 0;
  for (int start = 0; start < 4 * c; ++start) {
    if (seen[start]) continue;
    int out = start;
    do {
      const int in = layout.mate[out];
      seen[out] = seen[in] = 1;
      layout.outgoing[out] = 1;
      layout.arc_label[out] = layout.arc_label[in] = ++label;
      out = opposite_dart(in);
    } while (out != start);
  }
  layout.outer_corner = 3;  // a corner facing a face of g, hence white
  return Diagram::from_layout(std::move(layout));
}

bool isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (int e = 0; e < a.edge_count(); ++e) {
    if (a.edges()[e].sign != b.edges()[e].sign) return false;
  }
  const int darts = 2 * a.edge_count();
  for (int image_of_zero : {0, 1}) {
    std::vector<int> map(darts, -1);
    std::vector<int> stack{0};
    map[0] = image_of_zero;
    bool ok = true;
    while (ok && !stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      const std::pair<int, int> steps[2] = {{PlaneGraph::reverse(x), PlaneGraph::reverse(map[x])},
                                            {a.next_ccw(x), b.next_ccw(map[x])}};
      for (const auto& [from, to] : steps) {
        if (PlaneGraph::edge_of(from) != PlaneGraph::edge_of(to)) {
          ok = false;
          break;
        }
        if (map[from] < 0) {
          map[from] = to;
          stack.push_back(from);
        } else if (map[from] != to) {
          ok = false;
          break;
        }
      }
    }
    if (ok && std::find(map.begin(), map.end(), -1) == map.end()) return true;
  }
  return false;
}

namespace {

int parse_int(std::string_view tok, int line_no) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::Malformed, "line " + std::to_string(line_no) + ": `" + std::string(tok) + "` is not an integer");
  }
  return value;
}

}  // namespace

PlaneGraph parse_plane_graph(std::string_view text) {
  int vertices = -1;
  std::vector<std::pair<int, std::vector<int>>> rotation_lines;
  std::vector<std::pair<int, PlaneGraph::Edge>> edge_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (tok[0] == "V") {
      if (tok.size() != 2 || vertices >= 0) throw Error(ErrorCode::Malformed, where() + "expected a single `V n` header");
      vertices = parse_int(tok[1], line_no);
      if (vertices < 1) throw Error(ErrorCode::Malformed, where() + "vertex count must be positive");
    } else if (tok[0] == "R") {
      if (tok.size() < 2) throw Error(ErrorCode::Malformed, where() + "expected `R v d1 ... dk`");
      std::vector<int> darts;
      for (std::size_t k = 2; k < tok.size(); ++k) darts.push_back(parse_int(tok[k], line_no));
      rotation_lines.emplace_back(parse_int(tok[1], line_no), std::move(darts));
    } else if (tok[0] == "E") {
      if (tok.size() != 5) throw Error(ErrorCode::Malformed, where() + "expected `E id v_a v_b sign`");
      PlaneGraph::Edge e;
      e.tail = parse_int(tok[2], line_no) - 1;
      e.head = parse_int(tok[3], line_no) - 1;
      e.sign = tok[4] == "+" ? 1 : tok[4] == "-" ? -1 : parse_int(tok[4], line_no);
      edge_lines.emplace_back(parse_int(tok[1], line_no), e);
    } else {
      throw Error(ErrorCode::Malformed, where() + "unknown record `" + tok[0] + "`");
    }
  }
  if (vertices < 0) throw Error(ErrorCode::Malformed, "missing `V n` header");

  const int m = static_cast<int>(edge_lines.size());
  std::vector<PlaneGraph::Edge> edges(m);
  std::vector<char> have_edge(m, 0);
  for (const auto& [id, e] : edge_lines) {
    if (id < 1 || id > m || have_edge[id - 1]) throw Error(ErrorCode::Malformed, "edge ids must be 1..E without repeats");
    have_edge[id - 1] = 1;
    edges[id - 1] = e;
  }
  std::vector<std::vector<int>> rotation(vertices);
  std::vector<char> have_rotation(vertices, 0);
  for (const auto& [v, darts] : rotation_lines) {
    if (v < 1 || v > vertices || have_rotation[v - 1]) throw Error(ErrorCode::Malformed, "rotation lines must name each vertex once");
    have_rotation[v - 1] = 1;
    for (int token : darts) {
      const int e = token > 0 ? token : -token;
      if (token == 0 || e > m) throw Error(ErrorCode::Malformed, "dart refers to an unknown edge");
      rotation[v - 1].push_back(2 * (e - 1) + (token > 0 ? 0 : 1));
    }
  }
  return PlaneGraph(vertices, std::move(edges), std::move(rotation));
}

std::string format_plane_graph(const PlaneGraph& g) {
  std::ostringstream out;
  out << "V " << g.vertex_count() << '\n';
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    out << "E " << e + 1 << ' ' << edge.tail + 1 << ' ' << edge.head + 1 << ' ' << (edge.sign > 0 ? "+1" : "-1") << '\n';
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "R " << v + 1;
    for (int dart : g.rotation()[v]) out << ' ' << (dart % 2 == 0 ? "+" : "-") << dart / 2 + 1;
    out << '\n';
  }
  return out.str();
}

std::string to_dot(const PlaneGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v + 1 << ";\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    out << "  v" << edge.tail + 1 << " -- v" << edge.head + 1 << " [label=\"P" << e + 1 << (edge.sign > 0 ? " +" : " -")
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rcc
