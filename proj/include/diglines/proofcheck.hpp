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
// Executable claim checkers over single digraphs: pencil coincidence
// partitions with their counting identities, the R-set machinery for
// diameter-3 / girth-4 digraphs, and verifiers for the distance lemmas.
// Checkers collect violation witnesses instead of aborting, so exhaustive
// runs can aggregate counterexamples across a stream of digraphs.

#ifndef DIGLINES_PROOFCHECK_HPP
#define DIGLINES_PROOFCHECK_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diglines/digraph.hpp"
#include "diglines/quasimetric.hpp"

namespace diglines {

/// Outcome of one claim check: holds iff violations is empty.
struct ClaimVerdict {
  std::string claim_id;
  bool holds = true;
  std::vector<std::string> violations;

  void violate(std::string msg) {
    holds = false;
    violations.push_back(std::move(msg));
  }
  void merge(const ClaimVerdict& other) {
    if (!other.holds) holds = false;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

namespace detail {

// Groups V \ {x} by equality of ln(x,.), ordered by smallest member.
inline std::vector<std::pair<VertexSet, VertexSet>> pencil_groups(const DistanceMatrix& D,
                                                                  Vertex x) {
  std::array<VertexSet, kMaxVertices> lm{};
  for (Vertex y = 0; y < D.n; ++y)
    if (y != x) lm[y] = line_members(D, x, y);
  std::vector<std::pair<VertexSet, VertexSet>> groups;
  VertexSet done = 0;
  for (Vertex y = 0; y < D.n; ++y) {
    if (y == x || contains(done, y)) continue;
    VertexSet members = 0;
    for (Vertex z = y; z < D.n; ++z)
      if (z != x && lm[z] == lm[y]) members |= vertex_bit(z);
    groups.emplace_back(lm[y], members);
    done |= members;
  }
  return groups;
}

// Directed girth read off the distance matrix: shortest cycle through some
// arc (u,v), i.e. min over d(u,v)=1 of 1 + d(v,u).
inline int girth_from_distances(const DistanceMatrix& D) {
  int best = kUnreachable;
  for (Vertex u = 0; u < D.n; ++u)
    for (Vertex v = 0; v < D.n; ++v)
      if (u != v && D.at(u, v) == 1) best = std::min(best, 1 + D.at(v, u));
  return best;
}

inline void require_diameter(const DistanceMatrix& D, int want, const char* who) {
  const int got = diameter(D);
  if (got != want)
    throw std::invalid_argument(std::string(who) + ": diameter must be " +
                                std::to_string(want) + " (got " + std::to_string(got) + ")");
}

inline void require_girth_at_least(const DistanceMatrix& D, int want, const char* who) {
  const int got = girth_from_distances(D);
  if (got < want)
    throw std::invalid_argument(std::string(who) + ": directed girth must be at least " +
                                std::to_string(want) + " (got " + std::to_string(got) + ")");
}

}  // namespace detail

/// Coincidence structure of the pencil at x in a diameter-2 digraph: pairs
/// of vertices defining one common line from x, and vertices whose line is
/// unique. A pair stores the level-1 member first (smaller index first when
/// both sit at the same level, which happens only for non-oriented inputs).
/// Groups of three or more coincident vertices cannot be decomposed this way
/// and are rejected.
struct CoincidencePartitionDiam2 {
  Vertex apex = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  VertexSet singles_level1 = 0;
  VertexSet singles_level2 = 0;
  int pencil_size = 0;  // number of distinct lines from the apex

  int k() const { return static_cast<int>(pairs.size()); }
};

inline CoincidencePartitionDiam2 coincidence_partition_diam2(const DistanceMatrix& D,
                                                             Vertex x) {
  detail::require_diameter(D, 2, "coincidence_partition_diam2");
  CoincidencePartitionDiam2 part;
  part.apex = x;
  const auto groups = detail::pencil_groups(D, x);
  part.pencil_size = static_cast<int>(groups.size());
  for (const auto& [lmask, members] : groups) {
    const int size = set_size(members);
    if (size == 1) {
      const Vertex v = std::countr_zero(members);
      (D.at(x, v) == 1 ? part.singles_level1 : part.singles_level2) |= vertex_bit(v);
    } else if (size == 2) {
      const auto vs = set_to_vector(members);
      Vertex a = vs[0], b = vs[1];
      if (D.at(x, b) < D.at(x, a)) std::swap(a, b);
      part.pairs.emplace_back(a, b);
    } else {
      throw std::domain_error(
          "coincidence_partition_diam2: " + std::to_string(size) +
          " vertices share one line at apex " + std::to_string(x) +
          "; the pair decomposition does not apply");
    }
  }
  // Counting identities: |V| = 2k + |V1| + |V2| + 1 and |L^x| = |V| - 1 - k.
  assert(D.n == 2 * part.k() + set_size(part.singles_level1) +
                    set_size(part.singles_level2) + 1);
  assert(part.pencil_size == D.n - 1 - part.k());
  return part;
}

/// Coincidence structure of the pencil at x in a diameter-3 digraph:
/// coincident triples with one member per level, coincident pairs across two
/// levels, and unique-line vertices per level. Pencils with same-level
/// coincidences (impossible under the girth-4 hypotheses) are rejected.
struct CoincidencePartitionDiam3 {
  Vertex apex = 0;
  std::vector<std::array<Vertex, 3>> triples;            // (t1,t2,t3), ti at level i
  std::vector<std::pair<Vertex, Vertex>> pairs_12;
  std::vector<std::pair<Vertex, Vertex>> pairs_23;
  std::vector<std::pair<Vertex, Vertex>> pairs_13;
  VertexSet singles_1 = 0;
  VertexSet singles_2 = 0;
  VertexSet singles_3 = 0;
  int pencil_size = 0;
};

inline CoincidencePartitionDiam3 coincidence_partition_diam3(const DistanceMatrix& D,
                                                             Vertex x) {
  detail::require_diameter(D, 3, "coincidence_partition_diam3");
  CoincidencePartitionDiam3 part;
  part.apex = x;
  const auto groups = detail::pencil_groups(D, x);
  part.pencil_size = static_cast<int>(groups.size());
  for (const auto& [lmask, members] : groups) {
    const auto vs = set_to_vector(members);
    std::array<Vertex, 4> by_level = {-1, -1, -1, -1};  // by_level[i] = member at level i
    bool clash = false;
    for (Vertex v : vs) {
      const int lvl = D.at(x, v);
      if (by_level[lvl] != -1) clash = true;
      by_level[lvl] = v;
    }
    if (clash || vs.size() > 3)
      throw std::domain_error(
          "coincidence_partition_diam3: coincidence group " + set_to_string(members) +
          " at apex " + std::to_string(x) +
          " has two vertices at the same level; the level decomposition does not apply");
    const Vertex t1 = by_level[1], t2 = by_level[2], t3 = by_level[3];
    if (vs.size() == 1) {
      if (t1 != -1) part.singles_1 |= vertex_bit(t1);
      if (t2 != -1) part.singles_2 |= vertex_bit(t2);
      if (t3 != -1) part.singles_3 |= vertex_bit(t3);
    } else if (vs.size() == 2) {
      if (t3 == -1) part.pairs_12.emplace_back(t1, t2);
      else if (t2 == -1) part.pairs_13.emplace_back(t1, t3);
      else part.pairs_23.emplace_back(t2, t3);
    } else {
      part.triples.push_back({t1, t2, t3});
    }
  }
  const auto sort_pairs = [](std::vector<std::pair<Vertex, Vertex>>& ps) {
    std::sort(ps.begin(), ps.end());
  };
  sort_pairs(part.pairs_12);
  sort_pairs(part.pairs_23);
  sort_pairs(part.pairs_13);
  std::sort(part.triples.begin(), part.triples.end());
  // |V| = 3|V123| + 2(|V12|+|V23|+|V13|) + |V1|+|V2|+|V3| + 1 and the
  // pencil-size identity |L^x| = |V| - 1 - 2|V123| - |V12| - |V23| - |V13|.
  assert(D.n == 3 * static_cast<int>(part.triples.size()) +
                    2 * static_cast<int>(part.pairs_12.size() + part.pairs_23.size() +
                                         part.pairs_13.size()) +
                    set_size(part.singles_1) + set_size(part.singles_2) +
                    set_size(part.singles_3) + 1);
  assert(part.pencil_size ==
         D.n - 1 - 2 * static_cast<int>(part.triples.size()) -
             static_cast<int>(part.pairs_12.size()) -
             static_cast<int>(part.pairs_23.size()) -
             static_cast<int>(part.pairs_13.size()));
  return part;
}

/// Pairs (a,c) with d(x,a)=1, d(x,c)=3 and d(a,c)=3.
struct RSet {
  Vertex apex = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

inline RSet r_set(const DistanceMatrix& D, Vertex x) {
  detail::require_diameter(D, 3, "r_set");
  RSet r;
  r.apex = x;
  for (Vertex a = 0; a < D.n; ++a) {
    if (D.at(x, a) != 1) continue;
    for (Vertex c = 0; c < D.n; ++c)
      if (D.at(x, c) == 3 && D.at(a, c) == 3) r.pairs.emplace_back(a, c);
  }
  return r;
}

/// Both forms of the same-start separation lemma, over all vertex triples:
/// if d(x,y)=d(x,z) and d(z,x)+d(x,z) > d(z,y) then z is not on ln(x,y);
/// if d(y,x)=d(z,x) and d(z,x)+d(x,z) > d(y,z) then z is not on ln(y,x).
inline ClaimVerdict check_samestart(const DistanceMatrix& D) {
  ClaimVerdict v;
  v.claim_id = "samestart";
  for (Vertex x = 0; x < D.n; ++x) {
    for (Vertex y = 0; y < D.n; ++y) {
      if (y == x) continue;
      for (Vertex z = 0; z < D.n; ++z) {
        if (z == x || z == y) continue;
        const int back = D.at(z, x) + D.at(x, z);
        if (D.at(x, y) == D.at(x, z) && back > D.at(z, y) &&
            contains(line_members(D, x, y), z))
          v.violate("first form: x=" + std::to_string(x) + " y=" + std::to_string(y) +
                    " z=" + std::to_string(z) + " but z lies on ln(x,y)");
        if (D.at(y, x) == D.at(z, x) && back > D.at(y, z) &&
            contains(line_members(D, y, x), z))
          v.violate("second form: x=" + std::to_string(x) + " y=" + std::to_string(y) +
                    " z=" + std::to_string(z) + " but z lies on ln(y,x)");
      }
    }
  }
  return v;
}

namespace detail {

// Worker for the oriented diameter-2 claim suite at one apex, templated on
// the line computation so tests can inject a broken one and watch the
// checker report witnesses.
template <class LineFn>
ClaimVerdict check_diam2_apex(const DistanceMatrix& D, const Digraph& g, Vertex x,
                              LineFn&& ln) {
  ClaimVerdict v;
  v.claim_id = "diam2-claims";
  const auto tag = [&](const std::string& s) { return "x=" + std::to_string(x) + ": " + s; };

  std::array<VertexSet, kMaxVertices> lm{};
  for (Vertex y = 0; y < D.n; ++y)
    if (y != x) lm[y] = ln(D, x, y);

  VertexSet n1 = 0, n2 = 0;
  for (Vertex y = 0; y < D.n; ++y)
    if (y != x) (D.at(x, y) == 1 ? n1 : n2) |= vertex_bit(y);

  // Group the pencil by line equality.
  std::vector<std::pair<Vertex, Vertex>> pairs;  // (z in N, y in N^2)
  VertexSet singles1 = 0, singles2 = 0;
  VertexSet done = 0;
  for (Vertex y = 0; y < D.n; ++y) {
    if (y == x || contains(done, y)) continue;
    VertexSet members = 0;
    for (Vertex z = y; z < D.n; ++z)
      if (z != x && lm[z] == lm[y]) members |= vertex_bit(z);
    done |= members;
    const int size = set_size(members);
    if (size == 1) {
      (contains(n1, y) ? singles1 : singles2) |= vertex_bit(y);
      continue;
    }
    if (size != 2) {
      v.violate(tag("vertices " + set_to_string(members) + " all define one line from x"));
      continue;
    }
    const VertexSet in1 = members & n1, in2 = members & n2;
    if (set_size(in1) != 1 || set_size(in2) != 1) {
      v.violate(tag("coincident pair " + set_to_string(members) +
                    " is not split across N(x) and N^2(x)"));
      continue;
    }
    const Vertex z = std::countr_zero(in1);
    const Vertex yy = std::countr_zero(in2);
    pairs.emplace_back(z, yy);
    // Representation claim: ln(x,z) = ln(x,y) = {x,z,y}, d(x,y)=2, y -> x.
    if (!g.arc(yy, x))
      v.violate(tag("coincident pair (z=" + std::to_string(z) + ",y=" + std::to_string(yy) +
                    ") lacks the return arc y->x"));
    const VertexSet want = vertex_bit(x) | vertex_bit(z) | vertex_bit(yy);
    if (lm[z] != want)
      v.violate(tag("ln(x," + std::to_string(z) + ") = " + set_to_string(lm[z]) +
                    " instead of " + set_to_string(want)));
  }

  // Counting identity |V| = 2k + |V1| + |V2| + 1.
  const int k = static_cast<int>(pairs.size());
  if (D.n != 2 * k + set_size(singles1) + set_size(singles2) + 1)
    v.violate(tag("counting identity |V| = 2k+|V1|+|V2|+1 fails (k=" + std::to_string(k) +
                  ")"));

  // Out-neighbor lines avoid the apex: x not on ln(a,a') for a,a' in N(x).
  for_each_vertex(n1, [&](Vertex a) {
    for_each_vertex(n1, [&](Vertex b) {
      if (a == b) return;
      if (contains(ln(D, a, b), x))
        v.violate(tag("ln(" + std::to_string(a) + "," + std::to_string(b) +
                      ") contains x although both anchors are out-neighbors of x"));
    });
  });

  // Level uniqueness for i in {1,2}: ln(x,a) meets the level of a in {a}.
  for (Vertex a = 0; a < D.n; ++a) {
    if (a == x) continue;
    const VertexSet lvl = contains(n1, a) ? n1 : n2;
    if ((lm[a] & lvl) != vertex_bit(a))
      v.violate(tag("ln(x," + std::to_string(a) + ") meets N^" +
                    std::to_string(D.at(x, a)) + "(x) beyond " + std::to_string(a)));
  }

  // Tournament structure on the coincident pairs: both induced subdigraphs
  // are tournaments and z_i -> z_j iff y_j -> y_i.
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      const auto [zi, yi] = pairs[i];
      const auto [zj, yj] = pairs[j];
      if (i < j) {
        if (g.arc(zi, zj) == g.arc(zj, zi))
          v.violate(tag("z-side pair (" + std::to_string(zi) + "," + std::to_string(zj) +
                        ") is not a tournament edge"));
        if (g.arc(yi, yj) == g.arc(yj, yi))
          v.violate(tag("y-side pair (" + std::to_string(yi) + "," + std::to_string(yj) +
                        ") is not a tournament edge"));
      }
      if (g.arc(zi, zj) != g.arc(yj, yi))
        v.violate(tag("orientation mismatch: z" + std::to_string(zi) + "->z" +
                      std::to_string(zj) + " vs y" + std::to_string(yj) + "->y" +
                      std::to_string(yi)));
    }
  }
  return v;
}

// Worker for the R-set line distinctness claim, templated for self-tests.
template <class LineFn>
ClaimVerdict check_r_lines_core(const DistanceMatrix& D, Vertex x, LineFn&& ln) {
  ClaimVerdict v;
  v.claim_id = "r-lines-distinct";
  const RSet r = r_set(D, x);
  std::vector<VertexSet> ls;
  ls.reserve(r.pairs.size());
  for (const auto& [a, c] : r.pairs) {
    const VertexSet l = ln(D, a, c);
    ls.push_back(l);
    if (contains(l, x))
      v.violate("x=" + std::to_string(x) + ": ln(" + std::to_string(a) + "," +
                std::to_string(c) + ") contains the apex");
  }
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (ls[i] == ls[j])
        v.violate("x=" + std::to_string(x) + ": pairs (" + std::to_string(r.pairs[i].first) +
                  "," + std::to_string(r.pairs[i].second) + ") and (" +
                  std::to_string(r.pairs[j].first) + "," + std::to_string(r.pairs[j].second) +
                  ") define the same line");
  return v;
}

inline void require_theorem3_distances(const Digraph& g, const DistanceMatrix& D,
                                       bool need_bridgeless, const char* who) {
  require_diameter(D, 3, who);
  require_girth_at_least(D, 4, who);
  if (need_bridgeless && !is_bridgeless(g))
    throw std::invalid_argument(std::string(who) + ": digraph must be bridgeless");
}

}  // namespace detail

/// Claim suite for oriented digraphs of diameter two, at every apex:
/// coincident-pair representation, the counting identity, out-neighbor lines
/// avoiding the apex, level uniqueness, and the tournament structure.
inline ClaimVerdict check_diam2_claims(const Digraph& g) {
  if (!is_oriented(g))
    throw std::invalid_argument("check_diam2_claims: digraph must be oriented");
  const DistanceMatrix D = distance_matrix(g);
  detail::require_diameter(D, 2, "check_diam2_claims");
  ClaimVerdict v;
  v.claim_id = "diam2-claims";
  for (Vertex x = 0; x < g.n; ++x)
    v.merge(detail::check_diam2_apex(D, g, x, [](const DistanceMatrix& d, Vertex a, Vertex b) {
      return line_members(d, a, b);
    }));
  return v;
}

/// Distance patterns of bipartite digraphs of diameter three: cross-part
/// ordered pairs realize only (1,1), (1,3), (3,1), (3,3); same-part pairs
/// realize (2,2).
inline ClaimVerdict check_bipartite_distance_pattern(const Digraph& g) {
  const auto bp = bipartition(g);
  if (!bp)
    throw std::invalid_argument("check_bipartite_distance_pattern: digraph is not bipartite");
  const DistanceMatrix D = distance_matrix(g);
  detail::require_diameter(D, 3, "check_bipartite_distance_pattern");
  ClaimVerdict v;
  v.claim_id = "bipartite-distance-pattern";
  for (Vertex u = 0; u < g.n; ++u) {
    for (Vertex w = u + 1; w < g.n; ++w) {
      const int duv = D.at(u, w), dvu = D.at(w, u);
      const bool cross = contains(bp->X, u) != contains(bp->X, w);
      if (cross) {
        const bool ok = (duv == 1 || duv == 3) && (dvu == 1 || dvu == 3);
        if (!ok)
          v.violate("cross pair (" + std::to_string(u) + "," + std::to_string(w) +
                    ") has distances (" + std::to_string(duv) + "," + std::to_string(dvu) +
                    ")");
      } else if (duv != 2 || dvu != 2) {
        v.violate("same-part pair (" + std::to_string(u) + "," + std::to_string(w) +
                  ") has distances (" + std::to_string(duv) + "," + std::to_string(dvu) +
                  ")");
      }
    }
  }
  return v;
}

/// Level uniqueness under the diameter-3 / girth-4 hypotheses: for every
/// level i and a in N^i(x), ln(x,a) meets N^i(x) exactly in {a}.
inline ClaimVerdict check_uniq_same_level(const Digraph& g, Vertex x) {
  const DistanceMatrix D = distance_matrix(g);
  detail::require_theorem3_distances(g, D, false, "check_uniq_same_level");
  ClaimVerdict v;
  v.claim_id = "uniq-same-level";
  const auto ls = level_sets(D, x);
  for (Vertex a = 0; a < g.n; ++a) {
    if (a == x) continue;
    const int i = D.at(x, a);
    if ((line_members(D, x, a) & ls.level(i)) != vertex_bit(a))
      v.violate("x=" + std::to_string(x) + ": ln(x," + std::to_string(a) + ") meets N^" +
                std::to_string(i) + "(x) beyond " + std::to_string(a));
  }
  return v;
}

/// Lines anchored at distinct R-set pairs are pairwise distinct and none
/// contains the apex (so none belongs to the apex pencil). Requires the
/// full Theorem hypotheses: bridgeless, diameter 3, directed girth 4.
inline ClaimVerdict check_r_lines_distinct(const Digraph& g, Vertex x) {
  const DistanceMatrix D = distance_matrix(g);
  detail::require_theorem3_distances(g, D, true, "check_r_lines_distinct");
  return detail::check_r_lines_core(D, x, [](const DistanceMatrix& d, Vertex a, Vertex b) {
    return line_members(d, a, b);
  });
}

/// Lower bound on |R^x| in terms of the coincidence partition:
/// |R^x| >= a(a-1) + a(|V12|+|V23|+|V1|+|V3|) with a = |V123|+|V13|.
inline ClaimVerdict check_rx_lower_bound(const Digraph& g, Vertex x) {
  const DistanceMatrix D = distance_matrix(g);
  detail::require_theorem3_distances(g, D, true, "check_rx_lower_bound");
  ClaimVerdict v;
  v.claim_id = "rx-lower-bound";
  const auto part = coincidence_partition_diam3(D, x);
  const auto r = r_set(D, x);
  const long a = static_cast<long>(part.triples.size() + part.pairs_13.size());
  const long rest = static_cast<long>(part.pairs_12.size() + part.pairs_23.size()) +
                    set_size(part.singles_1) + set_size(part.singles_3);
  const long bound = a * (a - 1) + a * rest;
  if (static_cast<long>(r.pairs.size()) < bound)
    v.violate("x=" + std::to_string(x) + ": |R^x|=" + std::to_string(r.pairs.size()) +
              " below bound " + std::to_string(bound));
  return v;
}

/// Both counting identities of the diameter-3 coincidence partition,
/// including the pencil-size identity. A pencil that does not decompose
/// (same-level coincidences) is itself reported as a violation.
inline ClaimVerdict check_diam3_identities(const Digraph& g, Vertex x) {
  const DistanceMatrix D = distance_matrix(g);
  detail::require_theorem3_distances(g, D, false, "check_diam3_identities");
  ClaimVerdict v;
  v.claim_id = "diam3-identities";
  try {
    const auto part = coincidence_partition_diam3(D, x);
    const int t = static_cast<int>(part.triples.size());
    const int p12 = static_cast<int>(part.pairs_12.size());
    const int p23 = static_cast<int>(part.pairs_23.size());
    const int p13 = static_cast<int>(part.pairs_13.size());
    const int s1 = set_size(part.singles_1), s2 = set_size(part.singles_2),
              s3 = set_size(part.singles_3);
    if (g.n != 3 * t + 2 * (p12 + p23 + p13) + s1 + s2 + s3 + 1)
      v.violate("x=" + std::to_string(x) + ": vertex counting identity fails");
    if (part.pencil_size != g.n - 1 - 2 * t - p12 - p23 - p13)
      v.violate("x=" + std::to_string(x) + ": pencil-size identity fails (|L^x|=" +
                std::to_string(part.pencil_size) + ")");
  } catch (const std::domain_error& e) {
    v.violate(e.what());
  }
  return v;
}

/// For every cross-level coincident pair t in V^x_ij (i<j, k the remaining
/// level): ln(x,t_i) meets N^k(x), and only in unique-line vertices V^x_k.
inline ClaimVerdict check_level_relations(const Digraph& g, Vertex x) {
  const DistanceMatrix D = distance_matrix(g);
  detail::require_theorem3_distances(g, D, false, "check_level_relations");
  ClaimVerdict v;
  v.claim_id = "level-relations";
  const auto part = coincidence_partition_diam3(D, x);
  const auto ls = level_sets(D, x);
  const auto singles = [&](int k) {
    return k == 1 ? part.singles_1 : (k == 2 ? part.singles_2 : part.singles_3);
  };
  const auto probe = [&](Vertex ti, int i, int j, int k) {
    const VertexSet hit = line_members(D, x, ti) & ls.level(k);
    if (hit == 0)
      v.violate("x=" + std::to_string(x) + ": ln(x," + std::to_string(ti) + ") misses N^" +
                std::to_string(k) + "(x) for a V" + std::to_string(i) + std::to_string(j) +
                " pair");
    else if ((hit & ~singles(k)) != 0)
      v.violate("x=" + std::to_string(x) + ": ln(x," + std::to_string(ti) + ") meets N^" +
                std::to_string(k) + "(x) outside V^x_" + std::to_string(k));
  };
  for (const auto& [t1, t2] : part.pairs_12) probe(t1, 1, 2, 3);
  for (const auto& [t1, t3] : part.pairs_13) probe(t1, 1, 3, 2);
  for (const auto& [t2, t3] : part.pairs_23) probe(t2, 2, 3, 1);
  return v;
}

/// Arcs whose reverse is absent.
inline std::vector<std::pair<Vertex, Vertex>> asymmetric_arcs(const Digraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.n; ++u)
    for_each_vertex(g.out[u], [&](Vertex v) {
      if (!g.arc(v, u)) out.emplace_back(u, v);
    });
  return out;
}

/// Registry of digraph-level claim checks for the CLI; per-apex claims run
/// over every apex.
struct ClaimInfo {
  std::string_view id;
  std::string_view description;
  ClaimVerdict (*run)(const Digraph&);
};

namespace detail {
template <ClaimVerdict (*PerApex)(const Digraph&, Vertex)>
ClaimVerdict run_all_apexes(const Digraph& g) {
  ClaimVerdict v;
  for (Vertex x = 0; x < g.n; ++x) {
    ClaimVerdict one = PerApex(g, x);
    v.claim_id = one.claim_id;
    v.merge(one);
  }
  return v;
}

inline ClaimVerdict run_samestart(const Digraph& g) {
  return check_samestart(distance_matrix(g));
}
}  // namespace detail

inline std::span<const ClaimInfo> claim_registry() {
  static const ClaimInfo infos[] = {
      {"samestart",
       "same-start / same-end line separation over all vertex triples "
       "(any strongly connected digraph)",
       &detail::run_samestart},
      {"diam2-claims",
       "oriented diameter-2 suite: pair representation, counting identity, "
       "apex avoidance, tournaments",
       &check_diam2_claims},
      {"bipartite-distance-pattern",
       "bipartite diameter-3 distance patterns (1,1)/(1,3)/(3,1)/(3,3) and (2,2)",
       &check_bipartite_distance_pattern},
      {"uniq-same-level",
       "lines from an apex meet their anchor's level only in the anchor "
       "(diameter 3, girth 4)",
       &detail::run_all_apexes<&check_uniq_same_level>},
      {"r-lines-distinct",
       "R-set lines are pairwise distinct and avoid the apex "
       "(bridgeless, diameter 3, girth 4)",
       &detail::run_all_apexes<&check_r_lines_distinct>},
      {"rx-lower-bound",
       "|R^x| lower bound from the coincidence partition "
       "(bridgeless, diameter 3, girth 4)",
       &detail::run_all_apexes<&check_rx_lower_bound>},
      {"diam3-identities",
       "diameter-3 coincidence partition counting identities (diameter 3, girth 4)",
       &detail::run_all_apexes<&check_diam3_identities>},
      {"level-relations",
       "cross-level coincident pairs hit the remaining level only in "
       "unique-line vertices (diameter 3, girth 4)",
       &detail::run_all_apexes<&check_level_relations>},
  };
  return infos;
}

}  // namespace diglines

#endif  // DIGLINES_PROOFCHECK_HPP
