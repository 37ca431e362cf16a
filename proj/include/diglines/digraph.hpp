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

#ifndef DIGLINES_DIGRAPH_HPP
#define DIGLINES_DIGRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diglines {

/// Hard cap on vertex counts. Everything in this library stores vertex sets
/// as 16-bit masks and distances as bytes, which is exact for n <= 12.
inline constexpr int kMaxVertices = 12;

using Vertex = int;

/// A set of vertices, bit v set iff vertex v is a member.
using VertexSet = std::uint16_t;

inline constexpr VertexSet vertex_bit(Vertex v) {
  return static_cast<VertexSet>(1u << v);
}

inline constexpr bool contains(VertexSet s, Vertex v) {
  return (s >> v) & 1u;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

/// Calls f(v) for every vertex of s in ascending order.
template <class F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    const Vertex v = std::countr_zero(s);
    s &= static_cast<VertexSet>(s - 1);
    f(v);
  }
}

inline std::vector<Vertex> set_to_vector(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

/// Renders a vertex set as "{0,2,3}".
inline std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for_each_vertex(s, [&](Vertex v) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  });
  out += '}';
  return out;
}

/// A digraph G = (V, A) on vertices 0..n-1, no self-loops. Row u of `out`
/// holds the out-neighborhood of u as a bit mask. Immutable by convention
/// once built; all operations in this library are pure functions.
struct Digraph {
  int n = 1;
  std::array<VertexSet, kMaxVertices> out{};

  bool arc(Vertex u, Vertex v) const { return (out[u] >> v) & 1u; }

  void add_arc(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("add_arc: vertex out of range");
    if (u == v) throw std::invalid_argument("add_arc: self-loops are not allowed");
    out[u] |= vertex_bit(v);
  }

  void remove_arc(Vertex u, Vertex v) { out[u] &= static_cast<VertexSet>(~vertex_bit(v)); }

  VertexSet vertices() const { return static_cast<VertexSet>((1u << n) - 1u); }

  VertexSet out_neighbors(Vertex u) const { return out[u]; }

  VertexSet in_neighbors(Vertex v) const {
    VertexSet in = 0;
    for (Vertex u = 0; u < n; ++u)
      if (arc(u, v)) in |= vertex_bit(u);
    return in;
  }

  int arc_count() const {
    int m = 0;
    for (Vertex u = 0; u < n; ++u) m += set_size(out[u]);
    return m;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

inline Digraph make_digraph(int n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("digraph order must be between 1 and " +
                                std::to_string(kMaxVertices));
  Digraph g;
  g.n = n;
  return g;
}

/// Error raised by the compact-format parser; position() is the 0-based
/// offset of the offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the compact one-line format "<n>:<bits>", where <bits> are the n*n
/// row-major adjacency bits with an all-zero diagonal.
inline Digraph parse_digraph(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("malformed header: missing ':'", 0);
  if (colon == 0) throw ParseError("malformed header: empty vertex count", 0);
  int n = 0;
  for (std::size_t i = 0; i < colon; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9')
      throw ParseError(std::string("malformed header: unexpected character '") + c + "'", i);
    n = n * 10 + (c - '0');
    if (n > kMaxVertices)
      throw ParseError("vertex count exceeds the supported maximum of " +
                           std::to_string(kMaxVertices),
                       0);
  }
  if (n < 1) throw ParseError("vertex count must be at least 1", 0);

  const std::string_view bits = text.substr(colon + 1);
  const std::size_t want = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (bits.size() != want)
    throw ParseError("expected " + std::to_string(want) + " adjacency bits, got " +
                         std::to_string(bits.size()),
                     colon + 1 + std::min(bits.size(), want));

  Digraph g = make_digraph(n);
  for (std::size_t i = 0; i < want; ++i) {
    const char c = bits[i];
    const std::size_t pos = colon + 1 + i;
    if (c != '0' && c != '1')
      throw ParseError(std::string("invalid adjacency character '") + c +
                           "', expected '0' or '1'",
                       pos);
    const Vertex u = static_cast<Vertex>(i) / n;
    const Vertex v = static_cast<Vertex>(i) % n;
    if (c == '1') {
      if (u == v)
        throw ParseError("nonzero diagonal bit at row " + std::to_string(u), pos);
      g.out[u] |= vertex_bit(v);
    }
  }
  return g;
}

inline std::string serialize_digraph(const Digraph& g) {
  std::string s = std::to_string(g.n);
  s += ':';
  s.reserve(s.size() + static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n));
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = 0; v < g.n; ++v) s += g.arc(u, v) ? '1' : '0';
  return s;
}

inline std::array<VertexSet, kMaxVertices> in_rows(const Digraph& g) {
  std::array<VertexSet, kMaxVertices> in{};
  for (Vertex u = 0; u < g.n; ++u)
    for_each_vertex(g.out[u], [&](Vertex v) { in[v] |= vertex_bit(u); });
  return in;
}

inline VertexSet forward_closure(const Digraph& g, VertexSet start) {
  VertexSet seen = start;
  VertexSet frontier = start;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex u) { next |= g.out[u]; });
    next &= static_cast<VertexSet>(~seen);
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline VertexSet backward_closure(const Digraph& g, VertexSet start) {
  const auto in = in_rows(g);
  VertexSet seen = start;
  VertexSet frontier = start;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex u) { next |= in[u]; });
    next &= static_cast<VertexSet>(~seen);
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool strongly_connected(const Digraph& g) {
  if (g.n == 1) return true;
  const VertexSet all = g.vertices();
  return forward_closure(g, vertex_bit(0)) == all &&
         backward_closure(g, vertex_bit(0)) == all;
}

inline constexpr std::uint8_t kUnreachable = 0xFF;

/// BFS distances from src; unreachable vertices get kUnreachable.
inline std::array<std::uint8_t, kMaxVertices> bfs_distances(const Digraph& g, Vertex src) {
  std::array<std::uint8_t, kMaxVertices> d{};
  d.fill(kUnreachable);
  d[src] = 0;
  VertexSet seen = vertex_bit(src);
  VertexSet frontier = seen;
  std::uint8_t dist = 0;
  while (frontier != 0) {
    ++dist;
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex u) { next |= g.out[u]; });
    next &= static_cast<VertexSet>(~seen);
    for_each_vertex(next, [&](Vertex v) { d[v] = dist; });
    seen |= next;
    frontier = next;
  }
  return d;
}

inline bool is_graph_symmetric(const Digraph& g) {
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v)
      if (g.arc(u, v) != g.arc(v, u)) return false;
  return true;
}

inline bool is_oriented(const Digraph& g) {
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v)
      if (g.arc(u, v) && g.arc(v, u)) return false;
  return true;
}

/// Length of a shortest directed cycle, or nullopt for acyclic digraphs.
inline std::optional<int> shortest_directed_cycle(const Digraph& g) {
  int best = kUnreachable;
  for (Vertex v = 0; v < g.n; ++v) {
    const auto d = bfs_distances(g, v);
    for (Vertex u = 0; u < g.n; ++u) {
      if (u != v && g.arc(u, v) && d[u] != kUnreachable)
        best = std::min(best, 1 + static_cast<int>(d[u]));
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

/// Directed girth of a strongly connected digraph with n >= 2. Two iff some
/// symmetric arc pair exists; at least three for oriented digraphs.
inline int directed_girth(const Digraph& g) {
  if (g.n < 2 || !strongly_connected(g))
    throw std::invalid_argument(
        "directed_girth: requires a strongly connected digraph with at least two vertices");
  return *shortest_directed_cycle(g);
}

/// True iff removing the single arc (u,v) leaves no directed path u -> v.
inline bool is_bridge(const Digraph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.arc(u, v))
    throw std::invalid_argument("is_bridge: arc (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not present");
  Digraph h = g;
  h.remove_arc(u, v);
  return !contains(forward_closure(h, vertex_bit(u)), v);
}

inline bool is_bridgeless(const Digraph& g) {
  for (Vertex u = 0; u < g.n; ++u) {
    bool bad = false;
    for_each_vertex(g.out[u], [&](Vertex v) {
      if (!bad && is_bridge(g, u, v)) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

/// Partition {X, Y} of V with every arc crossing parts. X is the larger part
/// (p = |X| >= q = |Y|); on ties the part containing vertex 0 is X.
struct Bipartition {
  VertexSet X = 0;
  VertexSet Y = 0;
  int p = 0;
  int q = 0;
};

inline std::optional<Bipartition> bipartition(const Digraph& g) {
  if (g.n < 2) return std::nullopt;
  const auto in = in_rows(g);
  std::array<VertexSet, kMaxVertices> und{};
  for (Vertex v = 0; v < g.n; ++v) und[v] = g.out[v] | in[v];

  // 2-color the undirected support, component by component; the smallest
  // vertex of each component gets color 0, which makes the result
  // deterministic even when the support is disconnected.
  std::array<int, kMaxVertices> color{};
  color.fill(-1);
  VertexSet colored = 0;
  for (Vertex s = 0; s < g.n; ++s) {
    if (contains(colored, s)) continue;
    color[s] = 0;
    colored |= vertex_bit(s);
    VertexSet frontier = vertex_bit(s);
    while (frontier != 0) {
      VertexSet next = 0;
      bool conflict = false;
      for_each_vertex(frontier, [&](Vertex u) {
        for_each_vertex(und[u], [&](Vertex w) {
          if (color[w] == -1) {
            color[w] = 1 - color[u];
            next |= vertex_bit(w);
          } else if (color[w] == color[u]) {
            conflict = true;
          }
        });
      });
      if (conflict) return std::nullopt;
      colored |= next;
      frontier = next;
    }
  }

  VertexSet a = 0, b = 0;
  for (Vertex v = 0; v < g.n; ++v) (color[v] == 0 ? a : b) |= vertex_bit(v);
  if (b == 0) {
    // Only possible when g has no arcs at all; split deterministically.
    b = vertex_bit(g.n - 1);
    a &= static_cast<VertexSet>(~b);
  }
  Bipartition bp;
  const int sa = set_size(a), sb = set_size(b);
  if (sa > sb || (sa == sb && contains(a, 0))) {
    bp.X = a;
    bp.Y = b;
  } else {
    bp.X = b;
    bp.Y = a;
  }
  bp.p = set_size(bp.X);
  bp.q = set_size(bp.Y);
  return bp;
}

/// Reads a catalog: one compact digraph per line, '#' lines are comments,
/// empty lines are ignored.
inline std::vector<Digraph> read_catalog(std::istream& in) {
  std::vector<Digraph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    try {
      out.push_back(parse_digraph(std::string_view(line).substr(start)));
    } catch (const ParseError& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace diglines

#endif  // DIGLINES_DIGRAPH_HPP
