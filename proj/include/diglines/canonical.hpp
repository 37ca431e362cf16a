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
// Canonical labeling for digraphs on up to 12 vertices.
//
// The algorithm is classic individualization-refinement: vertices are first
// partitioned by label-invariant seeds (in/out degree plus the sorted
// multisets of BFS distances from and to the vertex), the partition is
// refined by counting arcs into each cell, and remaining non-singleton cells
// are split by individualizing each member in turn. Every discrete leaf
// yields a relabeled adjacency bit string; the lexicographically smallest
// one is the canonical form. Leaves that tie with the current best expose
// automorphisms, which prune sibling branches the way McKay's scheme does.

#ifndef DIGLINES_CANONICAL_HPP
#define DIGLINES_CANONICAL_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diglines/digraph.hpp"

namespace diglines {

/// Relabeling-invariant identifier of an isomorphism class: the compact
/// serialization of the canonical form. Equal keys iff isomorphic digraphs.
struct CanonicalKey {
  std::string bytes;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Relabels g by perm, where perm[old] = new. Test and tooling helper.
inline Digraph apply_permutation(const Digraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw std::invalid_argument("apply_permutation: permutation size mismatch");
  VertexSet seen = 0;
  for (Vertex v : perm) {
    if (v < 0 || v >= g.n || contains(seen, v))
      throw std::invalid_argument("apply_permutation: not a permutation");
    seen |= vertex_bit(v);
  }
  Digraph h = make_digraph(g.n);
  for (Vertex u = 0; u < g.n; ++u)
    for_each_vertex(g.out[u], [&](Vertex v) { h.out[perm[u]] |= vertex_bit(perm[v]); });
  return h;
}

namespace detail {

using Inv = unsigned __int128;

struct CanonResult {
  std::array<VertexSet, kMaxVertices> rows{};   // rows[i] bit (n-1-j) = arc(i,j)
  std::array<std::uint8_t, kMaxVertices> order{};  // order[i] = original vertex at slot i
};

class Canonicalizer {
 public:
  // part_mask: optional 2-coloring (bit set = color 1); colored cells are
  // never merged because the color seeds the invariant's top bits.
  Canonicalizer(const Digraph& g, VertexSet part_mask, bool use_colors)
      : n_(g.n), out_(g.out), in_(in_rows(g)) {
    for (Vertex v = 0; v < n_; ++v) {
      const auto dr = bfs_distances(g, v);
      for (Vertex u = 0; u < n_; ++u)
        dist_rows_[v][u] = dr[u] == kUnreachable ? std::uint8_t(kMaxVertices + 1) : dr[u];
    }
    // Column distance multisets need all rows first.
    for (Vertex v = 0; v < n_; ++v) {
      Inv s = 0;
      if (use_colors) s = contains(part_mask, v) ? 1 : 0;
      s = (s << 8) | static_cast<unsigned>(set_size(out_[v]));
      s = (s << 8) | static_cast<unsigned>(set_size(in_[v]));
      std::array<std::uint8_t, kMaxVertices> row{}, col{};
      for (Vertex u = 0; u < n_; ++u) {
        row[u] = dist_rows_[v][u];
        col[u] = dist_rows_[u][v];
      }
      std::sort(row.begin(), row.begin() + n_);
      std::sort(col.begin(), col.begin() + n_);
      for (int i = 0; i < n_; ++i) s = (s << 4) | row[i];
      for (int i = 0; i < n_; ++i) s = (s << 4) | col[i];
      seed_[v] = s;
    }
  }

  CanonResult run() {
    std::array<std::uint8_t, kMaxVertices> col{};
    // Rank the seed invariants to get the initial ordered partition.
    std::array<std::uint8_t, kMaxVertices> idx{};
    for (Vertex v = 0; v < n_; ++v) idx[v] = static_cast<std::uint8_t>(v);
    std::sort(idx.begin(), idx.begin() + n_,
              [&](std::uint8_t a, std::uint8_t b) { return seed_[a] < seed_[b]; });
    int k = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && seed_[idx[i]] != seed_[idx[i - 1]]) ++k;
      col[idx[i]] = static_cast<std::uint8_t>(k);
    }
    have_best_ = false;
    autos_.clear();
    path_len_ = 0;
    search(col);
    return CanonResult{best_rows_, best_order_};
  }

 private:
  // Refines col in place until stable; returns the number of cells.
  int refine(std::array<std::uint8_t, kMaxVertices>& col) const {
    int k = 0;
    for (Vertex v = 0; v < n_; ++v) k = std::max(k, static_cast<int>(col[v]));
    ++k;
    for (;;) {
      std::array<VertexSet, kMaxVertices + 1> cell{};
      for (Vertex v = 0; v < n_; ++v) cell[col[v]] |= vertex_bit(v);
      std::array<Inv, kMaxVertices> sig{};
      for (Vertex v = 0; v < n_; ++v) {
        Inv s = col[v];
        for (int c = 0; c < k; ++c) {
          s = (s << 4) | static_cast<unsigned>(std::popcount(VertexSet(out_[v] & cell[c])));
          s = (s << 4) | static_cast<unsigned>(std::popcount(VertexSet(in_[v] & cell[c])));
        }
        sig[v] = s;
      }
      std::array<std::uint8_t, kMaxVertices> idx{};
      for (Vertex v = 0; v < n_; ++v) idx[v] = static_cast<std::uint8_t>(v);
      std::sort(idx.begin(), idx.begin() + n_,
                [&](std::uint8_t a, std::uint8_t b) { return sig[a] < sig[b]; });
      int k2 = 0;
      std::array<std::uint8_t, kMaxVertices> next{};
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++k2;
        next[idx[i]] = static_cast<std::uint8_t>(k2);
      }
      ++k2;
      if (k2 == k) return k;
      col = next;
      k = k2;
    }
  }

  void search(std::array<std::uint8_t, kMaxVertices> col) {
    const int k = refine(col);
    if (k == n_) {
      leaf(col);
      return;
    }
    std::array<VertexSet, kMaxVertices> cell{};
    for (Vertex v = 0; v < n_; ++v) cell[col[v]] |= vertex_bit(v);
    int target = 0;
    while (set_size(cell[target]) == 1) ++target;

    VertexSet tried = 0;
    VertexSet members = cell[target];
    while (members != 0) {
      const Vertex v = std::countr_zero(members);
      members &= static_cast<VertexSet>(members - 1);
      if (tried != 0 && pruned_by_automorphism(v, tried)) continue;
      tried |= vertex_bit(v);
      auto col2 = col;
      const std::uint8_t tc = col[v];
      for (Vertex u = 0; u < n_; ++u) {
        if (col[u] > tc || (col[u] == tc && u != v))
          col2[u] = static_cast<std::uint8_t>(col[u] + 1);
      }
      path_[path_len_++] = static_cast<std::uint8_t>(v);
      search(col2);
      --path_len_;
    }
  }

  bool pruned_by_automorphism(Vertex v, VertexSet tried) const {
    for (const auto& a : autos_) {
      bool fixes_path = true;
      for (int i = 0; i < path_len_; ++i) {
        if (a[path_[i]] != path_[i]) {
          fixes_path = false;
          break;
        }
      }
      if (fixes_path && contains(tried, a[v])) return true;
    }
    return false;
  }

  void leaf(const std::array<std::uint8_t, kMaxVertices>& col) {
    std::array<std::uint8_t, kMaxVertices> order{};
    for (Vertex v = 0; v < n_; ++v) order[col[v]] = static_cast<std::uint8_t>(v);
    std::array<VertexSet, kMaxVertices> rows{};
    for (int i = 0; i < n_; ++i) {
      VertexSet r = 0;
      const VertexSet src = out_[order[i]];
      for (int j = 0; j < n_; ++j)
        r = static_cast<VertexSet>((r << 1) | ((src >> order[j]) & 1u));
      rows[i] = r;
    }
    if (!have_best_) {
      best_rows_ = rows;
      best_order_ = order;
      have_best_ = true;
      return;
    }
    int cmp = 0;
    for (int i = 0; i < n_ && cmp == 0; ++i)
      cmp = rows[i] < best_rows_[i] ? -1 : (rows[i] > best_rows_[i] ? 1 : 0);
    if (cmp < 0) {
      best_rows_ = rows;
      best_order_ = order;
    } else if (cmp == 0) {
      std::array<std::uint8_t, kMaxVertices> a{};
      bool identity = true;
      for (int i = 0; i < n_; ++i) {
        a[best_order_[i]] = order[i];
        if (best_order_[i] != order[i]) identity = false;
      }
      if (!identity && autos_.size() < 64) autos_.push_back(a);
    }
  }

  int n_;
  std::array<VertexSet, kMaxVertices> out_;
  std::array<VertexSet, kMaxVertices> in_;
  std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> dist_rows_{};
  std::array<Inv, kMaxVertices> seed_{};

  std::array<VertexSet, kMaxVertices> best_rows_{};
  std::array<std::uint8_t, kMaxVertices> best_order_{};
  bool have_best_ = false;
  std::vector<std::array<std::uint8_t, kMaxVertices>> autos_;
  std::array<std::uint8_t, kMaxVertices> path_{};
  int path_len_ = 0;
};

inline Digraph digraph_from_rows(int n, const std::array<VertexSet, kMaxVertices>& rows) {
  Digraph g = make_digraph(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((rows[i] >> (n - 1 - j)) & 1u) g.out[i] |= vertex_bit(j);
  return g;
}

}  // namespace detail

/// Canonical representative of g's isomorphism class (a relabeled copy).
inline Digraph canonical_form(const Digraph& g) {
  detail::Canonicalizer c(g, 0, false);
  const auto r = c.run();
  return detail::digraph_from_rows(g.n, r.rows);
}

inline CanonicalKey canonical_key(const Digraph& g) {
  return CanonicalKey{serialize_digraph(canonical_form(g))};
}

/// Canonical form of a 2-colored digraph with unlabeled colors (the two
/// colorings are tried and the smaller key wins). Used by the bipartite
/// generation lane, where the color classes are the two parts.
struct ColoredCanonicalForm {
  Digraph form;
  VertexSet colors = 0;  // color-1 vertices of the canonical form
  std::string key;
};

inline ColoredCanonicalForm canonical_form_colored(const Digraph& g, VertexSet part_mask) {
  ColoredCanonicalForm best;
  bool have = false;
  for (int flip = 0; flip < 2; ++flip) {
    const VertexSet mask =
        flip == 0 ? part_mask : static_cast<VertexSet>(~part_mask & g.vertices());
    detail::Canonicalizer c(g, mask, true);
    const auto r = c.run();
    Digraph form = detail::digraph_from_rows(g.n, r.rows);
    VertexSet colors = 0;
    std::string colorbits;
    for (int i = 0; i < g.n; ++i) {
      const bool one = contains(mask, r.order[i]);
      if (one) colors |= vertex_bit(i);
      colorbits += one ? '1' : '0';
    }
    std::string key = serialize_digraph(form) + "|" + colorbits;
    if (!have || key < best.key) {
      best = ColoredCanonicalForm{form, colors, std::move(key)};
      have = true;
    }
  }
  return best;
}

}  // namespace diglines

#endif  // DIGLINES_CANONICAL_HPP
