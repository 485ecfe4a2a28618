#pragma once

// Test-only helpers and brute-force oracles. Nothing here calls into the
// elimination code or the diagram's own face/strand traversal.

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rcc/cli.hpp"
#include "rcc/diagram.hpp"
#include "rcc/gf2.hpp"
#include "rcc/tait.hpp"

namespace rcc::test {

inline std::string fixture_path(const std::string& name) { return std::string(RCC_FIXTURE_DIR) + "/" + name; }

inline Diagram load_pd(const std::string& name) { return parse_pd(cli::read_file(fixture_path(name))); }

inline std::string load_graph_text(const std::string& name) { return cli::read_file(fixture_path(name)); }

inline PlaneGraph load_graph(const std::string& name) { return parse_plane_graph(load_graph_text(name)); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int classes() {
    int k = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) k += find(i) == i;
    return k;
  }
};

/// Components straight from a PD code: labels at positions 0/2 and 1/3
/// of a tuple lie on the same strand.
inline int pd_component_count(const PdCode& pd) {
  int max_label = 0;
  for (const auto& x : pd.crossings) {
    for (int l : x) max_label = std::max(max_label, l);
  }
  UnionFind uf(max_label + 1);
  for (const auto& x : pd.crossings) {
    uf.unite(x[0], x[2]);
    uf.unite(x[1], x[3]);
  }
  return uf.classes() - 1;  // label 0 is unused
}

/// Faces straight from a PD code by gluing sectors across arcs. Sector
/// (p, k) sits between positions k and k+1. An arc from position a at p to
/// position b at q has sector (p, a) and (q, b-1) on one side, (p, a-1)
/// and (q, b) on the other. Returns per-face sets of crossing indices.
inline std::vector<std::set<int>> pd_faces(const PdCode& pd) {
  const int c = static_cast<int>(pd.crossings.size());
  std::vector<std::vector<std::pair<int, int>>> ends(2 * c + 1);
  for (int p = 0; p < c; ++p) {
    for (int k = 0; k < 4; ++k) ends[pd.crossings[p][k]].push_back({p, k});
  }
  UnionFind uf(4 * c);
  const auto sector = [](int p, int k) { return 4 * p + (k + 4) % 4; };
  for (int label = 1; label <= 2 * c; ++label) {
    const auto [p, a] = ends[label][0];
    const auto [q, b] = ends[label][1];
    uf.unite(sector(p, a), sector(q, b - 1));
    uf.unite(sector(p, a - 1), sector(q, b));
  }
  std::vector<int> root_index(4 * c, -1);
  std::vector<std::set<int>> faces;
  for (int s = 0; s < 4 * c; ++s) {
    const int r = uf.find(s);
    if (root_index[r] < 0) {
      root_index[r] = static_cast<int>(faces.size());
      faces.emplace_back();
    }
    faces[root_index[r]].insert(s / 4);
  }
  return faces;
}

/// All 2^rows row combinations; feasible only for small matrices.
inline std::set<std::string> row_span(const gf2::BitMatrix& m) {
  std::set<std::string> span;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
    std::string v(m.cols(), '0');
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if ((mask >> r) & 1U) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (m(r, c)) v[c] = v[c] == '0' ? '1' : '0';
        }
      }
    }
    span.insert(v);
  }
  return span;
}

inline std::size_t brute_rank(const gf2::BitMatrix& m) {
  const std::size_t size = row_span(m).size();
  std::size_t r = 0;
  while ((std::size_t{1} << r) < size) ++r;
  return r;
}

inline std::size_t brute_nullity(const gf2::BitMatrix& m) {
  std::size_t zeros = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.cols()); ++mask) {
    bool kernel = true;
    for (std::size_t r = 0; r < m.rows() && kernel; ++r) {
      int parity = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) parity ^= (m(r, c) && ((mask >> c) & 1U)) ? 1 : 0;
      kernel = parity == 0;
    }
    zeros += kernel;
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < zeros) ++k;
  return k;
}

inline gf2::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, unsigned density_percent = 50) {
  gf2::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % 100 < density_percent);
  }
  return m;
}

inline gf2::BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
  gf2::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() % 2 == 1);
  return v;
}

inline gf2::BitVector bits(std::string_view s) { return gf2::BitVector::from_string(s); }

}  // namespace rcc::test
