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

// Independent reference implementations for the test suite. Everything here
// is deliberately naive — plain injection enumeration and exhaustive loops
// over all 2^m colorings — so that agreement with the library is meaningful.

#pragma once

#include <rforge/rforge.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

// Does host contain a (not necessarily induced) copy of pattern? Tries every
// injection of pattern vertices into host vertices.
inline bool contains_copy_naive(const rforge::graph& pattern, const rforge::graph& host) {
  int k = pattern.vertex_count();
  int n = host.vertex_count();
  if (k > n) return false;
  std::vector<int> map(k, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pattern.has_edge(i, j) && !host.has_edge(v, map[j])) ok = false;
      if (!ok) continue;
      map[i] = v;
      used[v] = 1;
      if (place(i + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return place(0);
}

inline bool is_mono_free_naive(const rforge::edge_coloring& psi, const rforge::graph& h) {
  return !contains_copy_naive(h, rforge::subgraph_of_color(psi, rforge::color::red)) &&
         !contains_copy_naive(h, rforge::subgraph_of_color(psi, rforge::color::blue));
}

struct naive_arrow_result {
  bool arrows = false;
  std::optional<rforge::edge_coloring> witness;
};

// Unpruned ground truth: every one of the 2^m colorings in turn.
inline naive_arrow_result arrows_naive(const rforge::graph& f, const rforge::graph& h) {
  int m = f.edge_count();
  if (m > 20) throw std::invalid_argument("naive arrowing oracle is capped at 20 edges");
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    std::vector<rforge::color> colors(m);
    for (int i = 0; i < m; ++i)
      colors[i] = (mask >> i) & 1 ? rforge::color::blue : rforge::color::red;
    rforge::edge_coloring psi(f, colors);
    if (is_mono_free_naive(psi, h)) return {false, std::move(psi)};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Random instances (fixed seeds in the tests keep every run identical)

inline rforge::graph random_graph(std::mt19937& rng, int n, double p) {
  rforge::graph_builder b(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) b.add_edge(u, v);
  return b.build();
}

// n vertices and exactly m edges drawn without replacement.
inline rforge::graph random_graph_with_edges(std::mt19937& rng, int n, int m) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  if (m > static_cast<int>(all.size())) throw std::invalid_argument("too many edges requested");
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  return rforge::build_graph(n, all);
}

inline rforge::edge_coloring random_coloring(std::mt19937& rng, const rforge::graph& g) {
  std::vector<rforge::color> colors(g.edge_count());
  std::bernoulli_distribution flip(0.5);
  for (auto& c : colors) c = flip(rng) ? rforge::color::blue : rforge::color::red;
  return rforge::edge_coloring(g, colors);
}

// The same graph under a uniformly random vertex relabeling.
inline rforge::graph relabeled(std::mt19937& rng, const rforge::graph& g) {
  std::vector<int> perm(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (const rforge::edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return rforge::build_graph(g.vertex_count(), edges);
}

}  // namespace oracle
