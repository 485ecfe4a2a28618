#include "rcc/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "rcc/error.hpp"

namespace rcc {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Labels faces as orbits of corner -> mate(next_ccw(corner)); ids follow the
// smallest corner of each orbit.
int label_faces(const std::vector<int>& mate, std::vector<int>& face_of_corner) {
  face_of_corner.assign(mate.size(), -1);
  int faces = 0;
  for (std::size_t start = 0; start < mate.size(); ++start) {
    if (face_of_corner[start] >= 0) continue;
    int corner = static_cast<int>(start);
    while (face_of_corner[corner] < 0) {
      face_of_corner[corner] = faces;
      corner = mate[next_ccw(corner)];
    }
    ++faces;
  }
  return faces;
}

bool is_connected(const std::vector<int>& mate) {
  const int crossings = static_cast<int>(mate.size() / 4);
  std::vector<char> seen(crossings, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int p = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      const int q = crossing_of(mate[4 * p + k]);
      if (!seen[q]) {
        seen[q] = 1;
        ++reached;
        stack.push_back(q);
      }
    }
  }
  return reached == crossings;
}

}  // namespace

PdCode parse_pd_code(std::string_view text) {
  PdCode pd;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto tokens = split_tokens(line);
    if (tokens.size() != 5 || tokens[0] != "X") {
      throw Error(ErrorCode::Malformed, "line " + std::to_string(line_no) + ": expected `X a b c d`");
    }
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) {
      const std::string_view tok = tokens[k + 1];
      int value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || value <= 0) {
        throw Error(ErrorCode::Malformed,
                    "line " + std::to_string(line_no) + ": `" + std::string(tok) + "` is not a positive integer label");
      }
      tuple[k] = value;
    }
    pd.crossings.push_back(tuple);
  }
  if (pd.crossings.empty()) throw Error(ErrorCode::Malformed, "no crossings");
  return pd;
}

std::string format_pd_code(const PdCode& pd) {
  std::ostringstream out;
  for (const auto& x : pd.crossings) out << "X " << x[0] << ' ' << x[1] << ' ' << x[2] << ' ' << x[3] << '\n';
  return out.str();
}

Diagram::Diagram(Layout layout) : layout_(std::move(layout)) {
  build_faces();
  build_components();
}

Diagram Diagram::from_layout(Layout layout) {
  const std::size_t darts = layout.mate.size();
  if (darts == 0 || darts % 4 != 0) throw Error(ErrorCode::Malformed, "a diagram needs at least one crossing");
  const int crossings = static_cast<int>(darts / 4);
  if (layout.under_axis.size() != static_cast<std::size_t>(crossings) || layout.outgoing.size() != darts ||
      layout.arc_label.size() != darts) {
    throw Error(ErrorCode::Malformed, "layout arrays have inconsistent sizes");
  }
  for (int d = 0; d < static_cast<int>(darts); ++d) {
    const int m = layout.mate[d];
    if (m < 0 || m >= static_cast<int>(darts) || m == d || layout.mate[m] != d) {
      throw Error(ErrorCode::Malformed, "arc pairing is not a fixed-point-free involution");
    }
    if (layout.arc_label[d] != layout.arc_label[m]) throw Error(ErrorCode::Malformed, "mated darts carry different labels");
    if (layout.outgoing[d] == layout.outgoing[m]) throw Error(ErrorCode::Malformed, "an arc must run from an outgoing to an incoming dart");
    if (layout.outgoing[d] == layout.outgoing[opposite_dart(d)]) {
      throw Error(ErrorCode::Malformed, "a strand must enter and leave each crossing once");
    }
  }
  for (std::uint8_t axis : layout.under_axis) {
    if (axis > 1) throw Error(ErrorCode::Malformed, "under axis must be 0 or 1");
  }
  if (!is_connected(layout.mate)) throw Error(ErrorCode::Disconnected, "the diagram is split");
  std::vector<int> face_of_corner;
  if (label_faces(layout.mate, face_of_corner) != crossings + 2) {
    throw Error(ErrorCode::NonPlanar, "rotation system does not describe a planar diagram (faces != c + 2)");
  }
  if (layout.outer_corner < 0 || layout.outer_corner >= static_cast<int>(darts)) {
    throw Error(ErrorCode::Malformed, "outer corner out of range");
  }
  return Diagram(std::move(layout));
}

Diagram Diagram::from_pd(const PdCode& pd) {
  const int crossings = static_cast<int>(pd.crossings.size());
  if (crossings == 0) throw Error(ErrorCode::Malformed, "no crossings");
  const int darts = 4 * crossings;

  std::vector<std::vector<int>> darts_of_label(2 * crossings + 1);
  for (int p = 0; p < crossings; ++p) {
    for (int k = 0; k < 4; ++k) {
      const int label = pd.crossings[p][k];
      if (label < 1 || label > 2 * crossings) {
        throw Error(ErrorCode::LabelMultiplicity,
                    "label " + std::to_string(label) + " outside 1.." + std::to_string(2 * crossings));
      }
      darts_of_label[label].push_back(4 * p + k);
    }
  }
  Layout layout;
  layout.mate.assign(darts, -1);
  layout.arc_label.assign(darts, 0);
  for (int label = 1; label <= 2 * crossings; ++label) {
    const auto& ds = darts_of_label[label];
    if (ds.size() != 2) {
      throw Error(ErrorCode::LabelMultiplicity,
                  "label " + std::to_string(label) + " appears " + std::to_string(ds.size()) + " times");
    }
    layout.mate[ds[0]] = ds[1];
    layout.mate[ds[1]] = ds[0];
    layout.arc_label[ds[0]] = layout.arc_label[ds[1]] = label;
  }
  if (!is_connected(layout.mate)) throw Error(ErrorCode::Disconnected, "the diagram is split");

  // Orient each strand. Position 0 of every tuple is the incoming
  // under-strand; strands that never pass under follow increasing labels.
  layout.under_axis.assign(crossings, 0);
  layout.outgoing.assign(darts, 0);
  std::vector<char> seen(darts, 0);
  for (int start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    std::vector<int> route;  // candidate outgoing darts in walk order
    int out = start;
    do {
      route.push_back(out);
      seen[out] = 1;
      const int in = layout.mate[out];
      seen[in] = 1;
      out = opposite_dart(in);
    } while (out != start);

    int forward_votes = 0;
    int backward_votes = 0;
    for (int o : route) {
      const int in = layout.mate[o];
      if (in % 4 == 0) ++forward_votes;  // enters at position 0: walk agrees
      if (in % 4 == 2) ++backward_votes;
    }
    if (forward_votes > 0 && backward_votes > 0) {
      throw Error(ErrorCode::Malformed, "position 0 is not the incoming under-strand consistently along a component");
    }
    bool reverse = backward_votes > 0;
    if (forward_votes == 0 && backward_votes == 0) {
      const std::size_t k = route.size();
      std::size_t lo = 0;
      for (std::size_t i = 1; i < k; ++i) {
        if (layout.arc_label[route[i]] < layout.arc_label[route[lo]]) lo = i;
      }
      const int min_label = layout.arc_label[route[lo]];
      if (k >= 3) {
        const int next = layout.arc_label[route[(lo + 1) % k]];
        const int prev = layout.arc_label[route[(lo + k - 1) % k]];
        reverse = next == min_label + 1 ? false : (prev == min_label + 1 ? true : prev < next);
      } else {
        // Too short for label order to decide: the lowest arc leaves
        // through its lower-numbered dart.
        const int o = route[lo];
        reverse = o > layout.mate[o];
      }
    }
    for (int o : route) {
      if (reverse) {
        layout.outgoing[layout.mate[o]] = 1;
      } else {
        layout.outgoing[o] = 1;
      }
    }
  }

  std::vector<int> face_of_corner;
  const int faces = label_faces(layout.mate, face_of_corner);
  if (faces != crossings + 2) {
    throw Error(ErrorCode::NonPlanar, "PD code does not describe a planar diagram (faces != c + 2)");
  }
  // PD codes carry no outer face; take the face with the most corners.
  std::vector<int> corner_count(faces, 0);
  for (int f : face_of_corner) ++corner_count[f];
  const int outer_face = static_cast<int>(std::max_element(corner_count.begin(), corner_count.end()) - corner_count.begin());
  layout.outer_corner = static_cast<int>(std::find(face_of_corner.begin(), face_of_corner.end(), outer_face) - face_of_corner.begin());

  return from_layout(std::move(layout));
}

void Diagram::build_faces() {
  const int faces = label_faces(layout_.mate, face_of_corner_);
  regions_.assign(faces, Region{});
  for (int f = 0; f < faces; ++f) regions_[f].id = f;
  for (int corner = 0; corner < static_cast<int>(face_of_corner_.size()); ++corner) {
    Region& r = regions_[face_of_corner_[corner]];
    r.corners.push_back(corner);
    r.boundary_crossings.push_back(crossing_of(corner));
  }
  for (Region& r : regions_) {
    auto& b = r.boundary_crossings;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
}

void Diagram::build_components() {
  const int darts = static_cast<int>(layout_.mate.size());
  std::vector<char> seen(darts, 0);
  std::vector<Component> found;
  for (int d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    const int start = is_outgoing(d) ? d : layout_.mate[d];
    Component comp;
    int out = start;
    do {
      comp.darts.push_back(out);
      comp.arcs.push_back(layout_.arc_label[out]);
      seen[out] = 1;
      seen[layout_.mate[out]] = 1;
      out = opposite_dart(layout_.mate[out]);
    } while (out != start);
    const auto lowest = std::min_element(comp.arcs.begin(), comp.arcs.end()) - comp.arcs.begin();
    std::rotate(comp.arcs.begin(), comp.arcs.begin() + lowest, comp.arcs.end());
    std::rotate(comp.darts.begin(), comp.darts.begin() + lowest, comp.darts.end());
    found.push_back(std::move(comp));
  }
  std::sort(found.begin(), found.end(), [](const Component& a, const Component& b) { return a.arcs.front() < b.arcs.front(); });
  component_of_dart_.assign(darts, -1);
  for (int i = 0; i < static_cast<int>(found.size()); ++i) {
    found[i].id = i;
    for (int o : found[i].darts) {
      component_of_dart_[o] = i;
      component_of_dart_[layout_.mate[o]] = i;
      component_of_dart_[opposite_dart(o)] = i;
    }
  }
  components_ = std::move(found);
}

std::pair<int, int> Diagram::strand_components(int crossing) const {
  const int axis = layout_.under_axis[crossing];
  return {component_of_dart_[4 * crossing + axis], component_of_dart_[4 * crossing + axis + 1]};
}

bool Diagram::is_self_crossing(int crossing) const {
  const auto [under, over] = strand_components(crossing);
  return under == over;
}

int Diagram::crossing_sign(int crossing) const {
  const int base = 4 * crossing;
  const int axis = layout_.under_axis[crossing];
  const int under_out = is_outgoing(base + axis) ? axis : axis + 2;
  const int over_out = is_outgoing(base + axis + 1) ? axis + 1 : (axis + 3) % 4;
  return over_out == (under_out + 1) % 4 ? 1 : -1;
}

int Diagram::linking_number(int i, int j) const {
  if (i < 0 || j < 0 || i >= component_count() || j >= component_count()) {
    throw Error(ErrorCode::IndexMismatch, "component id out of range");
  }
  if (i == j) throw Error(ErrorCode::SameComponent, "linking number needs two distinct components");
  int sum = 0;
  for (int p = 0; p < crossing_count(); ++p) {
    const auto [a, b] = strand_components(p);
    if ((a == i && b == j) || (a == j && b == i)) sum += crossing_sign(p);
  }
  if (sum % 2 != 0) throw Error(ErrorCode::InternalInconsistency, "odd signed count of inter-component crossings");
  return sum / 2;
}

Diagram Diagram::with_crossing_changes(const gf2::BitVector& crossings) const {
  if (crossings.size() != static_cast<std::size_t>(crossing_count())) {
    throw Error(ErrorCode::IndexMismatch, "crossing set length must equal the crossing count");
  }
  Diagram out = *this;
  for (std::size_t p : crossings.ones()) out.layout_.under_axis[p] ^= 1U;
  return out;
}

Diagram Diagram::mirror() const {
  gf2::BitVector all(crossing_count());
  for (int p = 0; p < crossing_count(); ++p) all.set(p);
  return with_crossing_changes(all);
}

PdCode Diagram::to_pd() const {
  PdCode pd;
  for (int p = 0; p < crossing_count(); ++p) {
    const int axis = layout_.under_axis[p];
    const int first = is_outgoing(4 * p + axis) ? axis + 2 : axis;
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) tuple[k] = layout_.arc_label[4 * p + (first + k) % 4];
    pd.crossings.push_back(tuple);
  }
  return pd;
}

Diagram parse_pd(std::string_view text) { return Diagram::from_pd(parse_pd_code(text)); }

const std::vector<Region>& faces(const Diagram& d) { return d.regions(); }
const std::vector<Component>& components(const Diagram& d) { return d.components(); }
int crossing_sign(const Diagram& d, int crossing) { return d.crossing_sign(crossing); }
int linking_number(const Diagram& d, int i, int j) { return d.linking_number(i, j); }

}  // namespace rcc
