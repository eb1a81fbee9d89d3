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

#pragma once

#include <vector>

#include "rforge/graph.hpp"

namespace rforge {

namespace detail {

/// Branch and bound with a greedy-coloring bound. Exact; desk scale.
class clique_solver {
 public:
  explicit clique_solver(const graph& g) : g_(g), best_(0) {}

  int solve() {
    if (g_.vertex_count() == 0) return 0;
    vertex_set all(g_.vertex_count());
    all.set_all();
    expand(all, 0);
    return best_;
  }

 private:
  void expand(const vertex_set& cand, int size) {
    if (cand.empty()) {
      if (size > best_) best_ = size;
      return;
    }
    // Greedy coloring of the candidate set; color classes bound the clique
    // extension size.
    std::vector<int> verts, bound;
    vertex_set uncolored = cand;
    int color_count = 0;
    while (!uncolored.empty()) {
      ++color_count;
      vertex_set cls = uncolored;
      while (!cls.empty()) {
        int v = cls.first();
        cls.subtract(g_.neighbors(v));
        cls.reset(v);
        uncolored.reset(v);
        verts.push_back(v);
        bound.push_back(color_count);
      }
    }
    vertex_set left = cand;
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      int v = verts[i];
      vertex_set next = left;
      next &= g_.neighbors(v);
      if (size + 1 > best_) best_ = size + 1;
      expand(next, size + 1);
      left.reset(v);
    }
  }

  const graph& g_;
  int best_;
};

}  // namespace detail

/// Exact clique number by branch and bound.
inline int clique_number(const graph& g) { return detail::clique_solver(g).solve(); }

inline graph complement_graph(const graph& g) {
  graph_builder b(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) b.add_edge(u, v);
  return b.build();
}

/// Exact independence number (clique number of the complement).
inline int independence_number(const graph& g) {
  return clique_number(complement_graph(g));
}

inline bool is_connected(const graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  vertex_set seen(n);
  std::vector<int> stack{0};
  seen.set(0);
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    g.neighbors(v).for_each([&](int w) {
      if (!seen.test(w)) {
        seen.set(w);
        ++reached;
        stack.push_back(w);
      }
    });
  }
  return reached == n;
}

/// BFS distance from u to v, or -1 when unreachable.
inline int vertex_distance(const graph& g, int u, int v) {
  if (u == v) return 0;
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> frontier{u};
  dist[u] = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      int dx = dist[x];
      bool done = false;
      g.neighbors(x).for_each([&](int w) {
        if (dist[w] < 0) {
          dist[w] = dx + 1;
          if (w == v) done = true;
          next.push_back(w);
        }
      });
      if (done) return dist[v];
    }
    frontier = std::move(next);
  }
  return -1;
}

/// Shortest distance between any endpoint of e and any endpoint of f
/// (edges at distance 0 share a vertex), or -1 when separated.
inline int edge_distance(const graph& g, const edge& e, const edge& f) {
  int best = -1;
  for (int a : {e.u, e.v})
    for (int b : {f.u, f.v}) {
      int d = vertex_distance(g, a, b);
      if (d >= 0 && (best < 0 || d < best)) best = d;
    }
  return best;
}

struct graph_stats_t {
  int min_degree = 0;
  int max_degree = 0;
  int clique_number = 0;
  int independence_number = 0;
  bool regular = false;
  int regular_degree = -1;  // set when regular
  bool connected = false;
};

inline graph_stats_t graph_stats(const graph& g) {
  graph_stats_t s;
  int n = g.vertex_count();
  if (n > 0) {
    s.min_degree = g.degree(0);
    s.max_degree = g.degree(0);
    for (int v = 1; v < n; ++v) {
      s.min_degree = std::min(s.min_degree, g.degree(v));
      s.max_degree = std::max(s.max_degree, g.degree(v));
    }
  }
  s.clique_number = clique_number(g);
  s.independence_number = independence_number(g);
  s.regular = (s.min_degree == s.max_degree);
  if (s.regular && n > 0) s.regular_degree = s.min_degree;
  s.connected = is_connected(g);
  return s;
}

}  // namespace rforge
