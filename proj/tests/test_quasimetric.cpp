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

#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "diglines/quasimetric.hpp"
#include "diglines/search.hpp"
#include "oracles.hpp"

using namespace diglines;

namespace {

std::set<int> to_std_set(VertexSet s) {
  std::set<int> out;
  for_each_vertex(s, [&](Vertex v) { out.insert(v); });
  return out;
}

const char* kTriangle = "3:010001100";
const char* kK3 = "3:011101110";
const char* kC4 = "4:0101101001011010";
const char* kOrientedC4 = "4:0100001000011000";
const char* kK23 = "5:0001100011000111110011100";

}  // namespace

TEST_CASE("distance matrices match the hand-computed examples", "[quasimetric]") {
  const DistanceMatrix tri = distance_matrix(parse_digraph(kTriangle));
  CHECK(tri.at(0, 1) == 1);
  CHECK(tri.at(1, 0) == 2);
  CHECK(tri.at(0, 2) == 2);

  const DistanceMatrix k3 = distance_matrix(parse_digraph(kK3));
  for (Vertex x = 0; x < 3; ++x)
    for (Vertex y = 0; y < 3; ++y) CHECK(k3.at(x, y) == (x == y ? 0 : 1));

  const DistanceMatrix c4 = distance_matrix(parse_digraph(kC4));
  CHECK(c4.at(0, 2) == 2);
  CHECK(c4.at(0, 1) == 1);
}

TEST_CASE("non-strongly-connected digraphs are refused", "[quasimetric]") {
  CHECK_THROWS_AS(distance_matrix(parse_digraph("2:0100")), NotStronglyConnected);
}

TEST_CASE("quasi-metric axioms hold and match Floyd-Warshall", "[quasimetric]") {
  std::mt19937_64 eng(3);
  int inspected = 0;
  for (int it = 0; it < 400; ++it) {
    const Digraph g = random_strongly_connected(3 + static_cast<int>(eng() % 7),
                                                0.3, eng());
    const DistanceMatrix D = distance_matrix(g);
    CHECK(satisfies_quasimetric_axioms(D));
    const auto fw = oracles::floyd_warshall(g);
    for (Vertex x = 0; x < g.n; ++x)
      for (Vertex y = 0; y < g.n; ++y) CHECK(D.at(x, y) == fw[x][y]);
    ++inspected;
  }
  CHECK(inspected == 400);
}

TEST_CASE("symmetric digraphs have symmetric distances", "[quasimetric]") {
  std::mt19937_64 eng(17);
  for (int it = 0; it < 200; ++it) {
    Digraph g = random_strongly_connected(3 + static_cast<int>(eng() % 6), 0.4, eng());
    for (Vertex u = 0; u < g.n; ++u)  // symmetrize
      for_each_vertex(g.out_neighbors(u), [&](Vertex v) { g.out[v] |= vertex_bit(u); });
    REQUIRE(is_graph_symmetric(g));
    const DistanceMatrix D = distance_matrix(g);
    for (Vertex x = 0; x < g.n; ++x)
      for (Vertex y = 0; y < g.n; ++y) CHECK(D.at(x, y) == D.at(y, x));
  }
}

TEST_CASE("diameters of the named digraphs", "[quasimetric]") {
  CHECK(diameter(distance_matrix(parse_digraph(kK3))) == 1);
  CHECK(diameter(distance_matrix(parse_digraph(kTriangle))) == 2);
  CHECK(diameter(distance_matrix(parse_digraph(kOrientedC4))) == 3);
}

TEST_CASE("segments", "[quasimetric]") {
  const DistanceMatrix tri = distance_matrix(parse_digraph(kTriangle));
  CHECK(to_std_set(segment(tri, 0, 2)) == std::set<int>{0, 1, 2});
  CHECK(to_std_set(segment(tri, 0, 1)) == std::set<int>{0, 1});  // distance-1 anchor

  const DistanceMatrix k23 = distance_matrix(parse_digraph(kK23));
  CHECK(to_std_set(segment(k23, 0, 1)) == std::set<int>{0, 1, 3, 4});

  CHECK_THROWS_AS(segment(tri, 1, 1), std::invalid_argument);
}

TEST_CASE("lines", "[quasimetric]") {
  const DistanceMatrix tri = distance_matrix(parse_digraph(kTriangle));
  CHECK(to_std_set(line_members(tri, 0, 1)) == std::set<int>{0, 1, 2});
  const Line l = line(tri, 0, 1);
  CHECK(l.x == 0);
  CHECK(l.y == 1);
  CHECK(l.members == (vertex_bit(0) | vertex_bit(1) | vertex_bit(2)));

  // In complete graphs each anchor pair defines exactly its own two-point line.
  for (int n = 3; n <= 6; ++n) {
    const DistanceMatrix D = distance_matrix(refs::complete_graph(n));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v) CHECK(line_members(D, u, v) == (vertex_bit(u) | vertex_bit(v)));
  }
  CHECK_THROWS_AS(line_members(tri, 2, 2), std::invalid_argument);
}

TEST_CASE("for oriented diameter-2 digraphs distance-2 lines equal segments",
          "[quasimetric]") {
  ClassConstraint oriented;
  oriented.oriented = Tri::Require;
  int inspected = 0;
  for (int n = 3; n <= 5; ++n) {
    for (const Digraph& g : enumerate(n, oriented)) {
      if (!strongly_connected(g)) continue;
      const DistanceMatrix D = distance_matrix(g);
      if (diameter(D) != 2) continue;
      ++inspected;
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
          if (x != y && D.at(x, y) == 2)
            CHECK(line_members(D, x, y) == segment(D, x, y));
    }
  }
  CHECK(inspected > 0);
}

TEST_CASE("segment/line containment for random digraphs", "[quasimetric]") {
  std::mt19937_64 eng(41);
  for (int it = 0; it < 200; ++it) {
    const Digraph g = random_strongly_connected(3 + static_cast<int>(eng() % 7), 0.35, eng());
    const DistanceMatrix D = distance_matrix(g);
    for (Vertex x = 0; x < g.n; ++x)
      for (Vertex y = 0; y < g.n; ++y) {
        if (x == y) continue;
        const VertexSet seg = segment(D, x, y);
        const VertexSet ln = line_members(D, x, y);
        const VertexSet anchors = vertex_bit(x) | vertex_bit(y);
        CHECK((seg & anchors) == anchors);
        CHECK((seg & ~ln) == 0);
      }
  }
}

TEST_CASE("oriented digraphs have distance sums of at least three", "[quasimetric]") {
  ClassConstraint oriented;
  oriented.oriented = Tri::Require;
  for (int n = 3; n <= 5; ++n) {
    for (const Digraph& g : enumerate(n, oriented)) {
      if (!strongly_connected(g)) continue;
      const DistanceMatrix D = distance_matrix(g);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) CHECK(D.at(u, v) + D.at(v, u) >= 3);
    }
  }
}

TEST_CASE("line sets and thinness", "[quasimetric]") {
  const LineSet tri = line_set(parse_digraph(kTriangle));
  CHECK(tri.count == 1);
  CHECK(tri.universal_count == 1);
  CHECK(is_thin(parse_digraph(kTriangle)));

  const LineSet c4 = line_set(parse_digraph(kC4));
  CHECK(c4.count == 1);
  CHECK(is_thin(parse_digraph(kC4)));

  const LineSet k4 = line_set(refs::complete_graph(4));
  CHECK(k4.count == 6);
  CHECK(k4.universal_count == 0);
  for (VertexSet l : k4.distinct_lines) CHECK(set_size(l) == 2);
  CHECK_FALSE(is_thin(refs::complete_graph(4)));

  CHECK(is_thin(parse_digraph(kK23)));
  CHECK(line_set(parse_digraph(kK23)).count == 4);

  CHECK_THROWS_AS(line_set(make_digraph(1)), std::invalid_argument);
}

TEST_CASE("line_set agrees with the literal transcription oracle at n <= 4",
          "[quasimetric]") {
  int compared = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const Digraph& g : enumerate(n, ClassConstraint{})) {
      if (!strongly_connected(g)) continue;
      const LineSet ls = line_set(g);
      std::set<std::set<int>> got;
      for (VertexSet l : ls.distinct_lines) got.insert(to_std_set(l));
      CHECK(got == oracles::oracle_line_family(g));
      ++compared;
    }
  }
  // 1 + 5 + 83 strongly connected classes for n = 2, 3, 4.
  CHECK(compared == 89);
}

TEST_CASE("pencils", "[quasimetric]") {
  const DistanceMatrix tri = distance_matrix(parse_digraph(kTriangle));
  const Pencil p = pencil(tri, 0, PencilDirection::FromApex, vertex_bit(1) | vertex_bit(2));
  REQUIRE(p.entries.size() == 2);
  CHECK(p.entries[0].second == (vertex_bit(0) | vertex_bit(1) | vertex_bit(2)));
  CHECK(p.entries[1].second == p.entries[0].second);
  CHECK(p.distinct_count() == 1);

  const DistanceMatrix k4 = distance_matrix(refs::complete_graph(4));
  const Pencil p4 = pencil(k4, 0, PencilDirection::FromApex,
                           static_cast<VertexSet>(k4.n == 4 ? 0b1110 : 0));
  CHECK(p4.distinct_count() == 3);
  for (const auto& [y, l] : p4.entries) CHECK(set_size(l) == 2);

  CHECK(pencil(tri, 0, PencilDirection::ToApex, 0).entries.empty());
  CHECK_THROWS_AS(pencil(tri, 0, PencilDirection::FromApex, vertex_bit(0)),
                  std::invalid_argument);
}

TEST_CASE("level sets partition the remaining vertices by distance", "[quasimetric]") {
  const DistanceMatrix tri = distance_matrix(parse_digraph(kTriangle));
  const LevelSets l0 = level_sets(tri, 0);
  CHECK(l0.level(1) == vertex_bit(1));
  CHECK(l0.level(2) == vertex_bit(2));
  CHECK(l0.eccentricity() == 2);

  const LevelSets oc4 = level_sets(distance_matrix(parse_digraph(kOrientedC4)), 0);
  CHECK(oc4.level(1) == vertex_bit(1));
  CHECK(oc4.level(2) == vertex_bit(2));
  CHECK(oc4.level(3) == vertex_bit(3));
  CHECK(oc4.level(4) == 0);

  const LevelSets k4 = level_sets(distance_matrix(refs::complete_graph(4)), 0);
  CHECK(k4.level(1) == (vertex_bit(1) | vertex_bit(2) | vertex_bit(3)));
}

TEST_CASE("structural profiles compose the predicates", "[quasimetric]") {
  const StructuralProfile tri = structural_profile(parse_digraph(kTriangle));
  CHECK(tri.strongly_connected);
  CHECK(tri.diameter == 2);
  CHECK(tri.directed_girth == 3);
  CHECK(tri.oriented);
  CHECK_FALSE(tri.bridgeless);
  CHECK_FALSE(tri.bipartition.has_value());

  const StructuralProfile k23 = structural_profile(parse_digraph(kK23));
  CHECK(k23.diameter == 2);
  CHECK(k23.directed_girth == 2);
  CHECK(k23.graph_symmetric);
  CHECK(k23.bridgeless);
  REQUIRE(k23.bipartition.has_value());
  CHECK(k23.bipartition->p == 3);
  CHECK(k23.bipartition->q == 2);

  const StructuralProfile oc4 = structural_profile(parse_digraph(kOrientedC4));
  CHECK(oc4.diameter == 3);
  CHECK(oc4.directed_girth == 4);
  CHECK(oc4.oriented);
  REQUIRE(oc4.bipartition.has_value());
  CHECK(oc4.bipartition->p == 2);
  CHECK_FALSE(oc4.bridgeless);

  const StructuralProfile dangling = structural_profile(parse_digraph("2:0100"));
  CHECK_FALSE(dangling.strongly_connected);
  CHECK_FALSE(dangling.diameter.has_value());
  CHECK_FALSE(dangling.directed_girth.has_value());
}
