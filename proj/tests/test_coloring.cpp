// Copyright 2026 The ramsey-forge Authors
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

#include <catch_amalgamated.hpp>

#include <rforge/rforge.hpp>

#include "oracles.hpp"

using namespace rforge;

TEST_CASE("edge colorings index by edge and by endpoints", "[coloring]") {
  graph g = path_graph(4);
  edge_coloring c(g);  // fill color
  CHECK(c.count(color::red) == 3);
  c.set(1, 2, color::blue);
  CHECK(c.at(1, 2) == color::blue);
  CHECK(c.at(2, 1) == color::blue);
  CHECK(c.count(color::red) == 2);
  CHECK(c.count(color::blue) == 1);
  CHECK_THROWS_AS(c.at(0, 3), std::invalid_argument);  // not an edge
  CHECK_THROWS_AS(c.set(0, 3, color::red), std::invalid_argument);
}

TEST_CASE("swapping colors twice is the identity", "[coloring]") {
  std::mt19937 rng(11);
  graph g = oracle::random_graph(rng, 7, 0.5);
  edge_coloring c = oracle::random_coloring(rng, g);
  CHECK(swap_colors(swap_colors(c)) == c);
  CHECK(swap_colors(c).count(color::red) == c.count(color::blue));
}

TEST_CASE("color classes partition the host", "[coloring]") {
  std::mt19937 rng(12);
  graph g = oracle::random_graph(rng, 8, 0.5);
  edge_coloring c = oracle::random_coloring(rng, g);
  graph red = subgraph_of_color(c, color::red);
  graph blue = subgraph_of_color(c, color::blue);
  CHECK(red.vertex_count() == g.vertex_count());  // spanning, never shrunk
  CHECK(blue.vertex_count() == g.vertex_count());
  CHECK(red.edge_count() + blue.edge_count() == g.edge_count());
  for (const edge& e : g.edges())
    CHECK(red.has_edge(e.u, e.v) != blue.has_edge(e.u, e.v));
}

TEST_CASE("monochromatic copy detection matches the naive oracle", "[coloring]") {
  std::mt19937 rng(13);
  std::vector<graph> targets = {complete_graph(3), path_graph(4), cycle_graph(4)};
  for (int trial = 0; trial < 200; ++trial) {
    graph g = oracle::random_graph(rng, 8, 0.5);
    edge_coloring c = oracle::random_coloring(rng, g);
    for (const graph& h : targets) {
      auto hit = find_mono_copy(c, h);
      CHECK(hit.has_value() != oracle::is_mono_free_naive(c, h));
      if (hit) {
        // The returned copy really is a copy, and really is monochromatic.
        graph cls = subgraph_of_color(c, hit->col);
        CHECK(is_valid_embedding(h, cls, hit->emb));
      }
    }
  }
}

TEST_CASE("mono-free verdicts are swap-symmetric", "[coloring]") {
  std::mt19937 rng(14);
  graph h = complete_graph(3);
  for (int trial = 0; trial < 300; ++trial) {
    graph g = oracle::random_graph(rng, 7, 0.6);
    edge_coloring c = oracle::random_coloring(rng, g);
    CHECK(is_mono_free(c, h) == is_mono_free(swap_colors(c), h));
  }
}

TEST_CASE("color patterns read the edges from a vertex to a target list", "[coloring]") {
  graph g = complete_graph(4);
  edge_coloring c(g, color::blue);
  c.set(0, 1, color::red);
  c.set(0, 3, color::red);
  color_pattern_t p = color_pattern(c, 0, {1, 2, 3});
  CHECK(p.str() == "RBR");
  CHECK(p.observer == 0);

  // A shorter target list never compares equal, and reading a non-edge throws.
  edge_coloring d(g, color::blue);
  d.set(2, 1, color::red);
  d.set(2, 3, color::red);
  CHECK_FALSE(p == color_pattern(d, 2, {1, 3}));
  CHECK_THROWS_AS(color_pattern(c, 0, {0}), std::invalid_argument);
}

TEST_CASE("color patterns with matching reads compare equal across observers", "[coloring]") {
  graph g = complete_graph(5);
  edge_coloring c(g, color::blue);
  c.set(0, 2, color::red);
  c.set(1, 2, color::red);
  color_pattern_t from0 = color_pattern(c, 0, {2, 3, 4});
  color_pattern_t from1 = color_pattern(c, 1, {2, 3, 4});
  CHECK(from0 == from1);  // same targets, same colors RBB
  CHECK(from0.str() == "RBB");
  c.set(1, 3, color::red);
  CHECK_FALSE(from0 == color_pattern(c, 1, {2, 3, 4}));
}

TEST_CASE("coloring json roundtrips and validates", "[coloring]") {
  std::mt19937 rng(15);
  graph g = oracle::random_graph(rng, 6, 0.5);
  edge_coloring c = oracle::random_coloring(rng, g);
  auto j = coloring_to_json(c);
  edge_coloring back = coloring_from_json(g, j);
  CHECK(back == c);

  // Exact cover: missing, foreign, and duplicate entries all fail.
  auto missing = j;
  missing["edges"].erase(0);
  CHECK_THROWS_AS(coloring_from_json(g, missing), std::invalid_argument);
  auto dup = j;
  if (dup["edges"].size() >= 2) {
    dup["edges"][1] = dup["edges"][0];
    CHECK_THROWS_AS(coloring_from_json(g, dup), std::invalid_argument);
  }
  CHECK_THROWS_AS(coloring_from_json(complete_graph(6), j), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_json(g, nlohmann::json::array()), std::invalid_argument);
}

TEST_CASE("coloring dot export carries edge colors", "[coloring]") {
  graph g = path_graph(3);
  edge_coloring c(g);
  c.set(1, 2, color::blue);
  std::string dot = coloring_to_dot(c);
  CHECK(dot.find("[color=red]") != std::string::npos);
  CHECK(dot.find("[color=blue]") != std::string::npos);
}

// ---------------------------------------------------------------------------
// Extension around a low-degree vertex

namespace {

// Mono-free coloring of f with v's edges removed, if one exists.
std::optional<edge_coloring> mono_free_base(const graph& f, int v, const graph& h) {
  graph cleared = detail::vertex_cleared(f, v);
  arrowing_result r = arrows(cleared, h);
  if (r.verdict == arrow_verdict::arrows) return std::nullopt;
  return r.witness;
}

}  // namespace

TEST_CASE("split extension keeps colorings mono-free for 2-regular targets", "[coloring][extension]") {
  std::mt19937 rng(16);
  std::vector<graph> targets = {cycle_graph(4), cycle_graph(5)};
  int done = 0;
  while (done < 60) {
    graph f = oracle::random_graph(rng, 5 + rng() % 5, 0.35);
    int v = rng() % f.vertex_count();
    if (f.degree(v) > 2) continue;  // 2*delta - 2 with delta = 2
    const graph& h = targets[done % targets.size()];
    auto base = mono_free_base(f, v, h);
    if (!base) continue;
    edge_coloring extended = extend_split(f, v, *base, 2);
    CHECK(is_mono_free(extended, h));
    // The extension never rewrites the base: edges away from v keep colors.
    for (const edge& e : f.edges())
      if (e.u != v && e.v != v) CHECK(extended.at(e.u, e.v) == base->at(e.u, e.v));
    ++done;
  }
}

TEST_CASE("split extension colors the low vertex deterministically", "[coloring][extension]") {
  // Star center 0 with leaves 1..4 plus an outer edge; extend around v=0
  // with delta = 3: first delta-1 = 2 neighbors in ascending order turn
  // red, the rest blue.
  graph f = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}});
  graph cleared = detail::vertex_cleared(f, 0);
  edge_coloring base(cleared, color::blue);
  edge_coloring out = extend_split(f, 0, base, 3);
  CHECK(out.at(0, 1) == color::red);
  CHECK(out.at(0, 2) == color::red);
  CHECK(out.at(0, 3) == color::blue);
  CHECK(out.at(0, 4) == color::blue);
  CHECK(out.at(4, 5) == color::blue);
}

TEST_CASE("split extension validates its inputs", "[coloring][extension]") {
  graph f = complete_graph(4);  // every degree 3 > 2*2-2
  graph cleared = detail::vertex_cleared(f, 0);
  edge_coloring base(cleared);
  CHECK_THROWS_AS(extend_split(f, 0, base, 2), std::invalid_argument);
  CHECK_THROWS_AS(extend_split(f, 99, base, 2), std::invalid_argument);
  // Wrong base host: the full graph instead of the cleared one.
  CHECK_THROWS_AS(extend_split(f, 0, edge_coloring(f), 2), std::invalid_argument);
}

TEST_CASE("packing extension keeps colorings mono-free for the 4-vertex apex target",
          "[coloring][extension]") {
  graph h = make_H_t_d(3, 2);
  std::mt19937 rng(17);
  int done = 0;
  while (done < 60) {
    graph f = oracle::random_graph(rng, 5 + rng() % 5, 0.4);
    int v = rng() % f.vertex_count();
    if (f.degree(v) > 3) continue;  // must stay below d*d = 4
    auto base = mono_free_base(f, v, h);
    if (!base) continue;
    edge_coloring extended = extend_packing(f, v, *base, 2);
    CHECK(is_mono_free(extended, h));

    // Structural claims: among neighbors reached by red edges from v there
    // is no red edge; among neighbors reached by blue edges, no blue edge.
    std::vector<int> nbrs = f.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!f.has_edge(nbrs[i], nbrs[j])) continue;
        color between = extended.at(nbrs[i], nbrs[j]);
        color vi = extended.at(v, nbrs[i]), vj = extended.at(v, nbrs[j]);
        if (vi == color::red && vj == color::red) CHECK(between != color::red);
        if (vi == color::blue && vj == color::blue) CHECK(between != color::blue);
      }
    ++done;
  }
}

TEST_CASE("packing extension validates its inputs", "[coloring][extension]") {
  graph f = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});  // deg(0) = 4 = d*d
  graph cleared = detail::vertex_cleared(f, 0);
  CHECK_THROWS_AS(extend_packing(f, 0, edge_coloring(cleared), 2), std::invalid_argument);
  CHECK_THROWS_AS(extend_packing(f, 0, edge_coloring(cleared), 0), std::invalid_argument);
}
