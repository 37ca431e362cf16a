// Copyright 2026 The diglines Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Quasi-metric geometry of strongly connected digraphs: distances, segments,
// lines, line sets, pencils, level sets and the thinness test. Distances are
// directed shortest-path lengths; for x != y the segment and line are
//
//   [xy]  = { z : d(x,y) = d(x,z) + d(z,y) }
//   ln(xy) = { z : x in [zy]  or  z in [xy]  or  y in [xz] }.

#ifndef DIGLINES_QUASIMETRIC_HPP
#define DIGLINES_QUASIMETRIC_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diglines/digraph.hpp"

namespace diglines {

struct NotStronglyConnected : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact directed distances; only defined for strongly connected digraphs,
/// so every entry is finite.
struct DistanceMatrix {
  int n = 0;
  std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> d{};

  int at(Vertex x, Vertex y) const { return d[x][y]; }
};

inline bool satisfies_quasimetric_axioms(const DistanceMatrix& D) {
  for (Vertex x = 0; x < D.n; ++x) {
    if (D.at(x, x) != 0) return false;
    for (Vertex y = 0; y < D.n; ++y)
      if (x != y && D.at(x, y) < 1) return false;
  }
  for (Vertex x = 0; x < D.n; ++x)
    for (Vertex y = 0; y < D.n; ++y)
      for (Vertex z = 0; z < D.n; ++z)
        if (D.at(x, z) > D.at(x, y) + D.at(y, z)) return false;
  return true;
}

inline DistanceMatrix distance_matrix(const Digraph& g) {
  DistanceMatrix D;
  D.n = g.n;
  for (Vertex x = 0; x < g.n; ++x) {
    D.d[x] = bfs_distances(g, x);
    for (Vertex y = 0; y < g.n; ++y) {
      if (D.d[x][y] == kUnreachable)
        throw NotStronglyConnected("no directed path from " + std::to_string(x) +
                                   " to " + std::to_string(y) +
                                   ": the quasi-metric is undefined");
    }
  }
  assert(satisfies_quasimetric_axioms(D));
  return D;
}

inline int diameter(const DistanceMatrix& D) {
  int m = 0;
  for (Vertex x = 0; x < D.n; ++x)
    for (Vertex y = 0; y < D.n; ++y) m = std::max(m, D.at(x, y));
  return m;
}

namespace detail {
inline void require_distinct(Vertex x, Vertex y, const char* what) {
  if (x == y)
    throw std::invalid_argument(std::string(what) + ": anchor vertices must be distinct");
}
}  // namespace detail

/// Vertices on some shortest path from x to y. Always contains x and y.
inline VertexSet segment(const DistanceMatrix& D, Vertex x, Vertex y) {
  detail::require_distinct(x, y, "segment");
  VertexSet s = 0;
  for (Vertex z = 0; z < D.n; ++z)
    if (D.at(x, y) == D.at(x, z) + D.at(z, y)) s |= vertex_bit(z);
  return s;
}

inline VertexSet line_members(const DistanceMatrix& D, Vertex x, Vertex y) {
  detail::require_distinct(x, y, "line");
  VertexSet m = 0;
  for (Vertex z = 0; z < D.n; ++z) {
    const bool x_in_zy = D.at(z, y) == D.at(z, x) + D.at(x, y);
    const bool z_in_xy = D.at(x, y) == D.at(x, z) + D.at(z, y);
    const bool y_in_xz = D.at(x, z) == D.at(x, y) + D.at(y, z);
    if (x_in_zy || z_in_xy || y_in_xz) m |= vertex_bit(z);
  }
  return m;
}

/// A line with its defining anchor pair, kept for diagnostics; lines are
/// compared as plain vertex sets everywhere that counts them.
struct Line {
  VertexSet members = 0;
  Vertex x = 0;
  Vertex y = 0;
};

inline Line line(const DistanceMatrix& D, Vertex x, Vertex y) {
  return Line{line_members(D, x, y), x, y};
}

/// The family of distinct lines over all n(n-1) ordered anchor pairs.
struct LineSet {
  std::vector<VertexSet> distinct_lines;  // sorted ascending as bit masks
  int count = 0;
  int universal_count = 0;  // lines equal to the whole vertex set
};

inline LineSet line_set(const DistanceMatrix& D) {
  if (D.n < 2) throw std::invalid_argument("line_set: need at least two vertices");
  LineSet ls;
  ls.distinct_lines.reserve(static_cast<std::size_t>(D.n) * (D.n - 1));
  for (Vertex x = 0; x < D.n; ++x)
    for (Vertex y = 0; y < D.n; ++y)
      if (x != y) ls.distinct_lines.push_back(line_members(D, x, y));
  std::sort(ls.distinct_lines.begin(), ls.distinct_lines.end());
  ls.distinct_lines.erase(std::unique(ls.distinct_lines.begin(), ls.distinct_lines.end()),
                          ls.distinct_lines.end());
  ls.count = static_cast<int>(ls.distinct_lines.size());
  const VertexSet all = static_cast<VertexSet>((1u << D.n) - 1u);
  for (VertexSet l : ls.distinct_lines)
    if (l == all) ++ls.universal_count;
  return ls;
}

inline LineSet line_set(const Digraph& g) { return line_set(distance_matrix(g)); }

/// A digraph is thin when it defines fewer distinct lines than vertices.
inline bool is_thin(const DistanceMatrix& D) { return line_set(D).count < D.n; }
inline bool is_thin(const Digraph& g) { return is_thin(distance_matrix(g)); }

enum class PencilDirection { FromApex, ToApex };

/// The pencil (x,U) (lines ln(xy), y in U) or (U,x) (lines ln(yx)).
struct Pencil {
  Vertex apex = 0;
  PencilDirection direction = PencilDirection::FromApex;
  std::vector<std::pair<Vertex, VertexSet>> entries;  // endpoint -> line, ascending

  int distinct_count() const {
    std::vector<VertexSet> ls;
    ls.reserve(entries.size());
    for (const auto& [v, l] : entries) ls.push_back(l);
    std::sort(ls.begin(), ls.end());
    return static_cast<int>(std::unique(ls.begin(), ls.end()) - ls.begin());
  }
};

inline Pencil pencil(const DistanceMatrix& D, Vertex x, PencilDirection dir, VertexSet U) {
  if (contains(U, x))
    throw std::invalid_argument("pencil: apex must not belong to U");
  Pencil p;
  p.apex = x;
  p.direction = dir;
  for_each_vertex(U, [&](Vertex y) {
    const VertexSet l =
        dir == PencilDirection::FromApex ? line_members(D, x, y) : line_members(D, y, x);
    p.entries.emplace_back(y, l);
  });
  return p;
}

/// Distance levels N^i(x) partitioning V minus the apex.
struct LevelSets {
  Vertex apex = 0;
  std::vector<VertexSet> levels;  // levels[i-1] = N^i(x)

  VertexSet level(int i) const {
    if (i < 1 || i > static_cast<int>(levels.size())) return 0;
    return levels[static_cast<std::size_t>(i - 1)];
  }
  int eccentricity() const { return static_cast<int>(levels.size()); }
};

inline LevelSets level_sets(const DistanceMatrix& D, Vertex x) {
  LevelSets ls;
  ls.apex = x;
  int ecc = 0;
  for (Vertex v = 0; v < D.n; ++v) ecc = std::max(ecc, D.at(x, v));
  ls.levels.assign(static_cast<std::size_t>(ecc), 0);
  for (Vertex v = 0; v < D.n; ++v)
    if (v != x) ls.levels[static_cast<std::size_t>(D.at(x, v) - 1)] |= vertex_bit(v);
  return ls;
}

/// Aggregate of the structural predicates plus diameter.
struct StructuralProfile {
  bool strongly_connected = false;
  std::optional<int> diameter;        // present iff strongly connected
  std::optional<int> directed_girth;  // absent iff acyclic
  bool bridgeless = false;
  bool oriented = false;
  bool graph_symmetric = false;
  std::optional<Bipartition> bipartition;
};

inline StructuralProfile structural_profile(const Digraph& g) {
  StructuralProfile p;
  p.strongly_connected = strongly_connected(g);
  p.oriented = is_oriented(g);
  p.graph_symmetric = is_graph_symmetric(g);
  p.directed_girth = shortest_directed_cycle(g);
  p.bridgeless = is_bridgeless(g);
  p.bipartition = bipartition(g);
  if (p.strongly_connected) p.diameter = diameter(distance_matrix(g));
  return p;
}

}  // namespace diglines

#endif  // DIGLINES_QUASIMETRIC_HPP
