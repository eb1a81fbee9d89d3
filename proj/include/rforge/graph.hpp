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

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rforge/bitset.hpp"

namespace rforge {

/// Undirected edge, stored with u < v.
struct edge {
  int u = 0;
  int v = 0;
  edge() = default;
  edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
  friend bool operator==(const edge&, const edge&) = default;
  friend auto operator<=>(const edge&, const edge&) = default;
};

/// Named vertex subsets carried through constructions ("S", "T_1", ...).
using role_map = std::map<std::string, std::vector<int>>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction; adjacency is kept as per-vertex bit sets so neighborhood
/// intersection is word-parallel.
class graph {
 public:
  graph() = default;

  graph(int n, std::vector<edge> sorted_edges, role_map roles)
      : n_(n),
        edges_(std::move(sorted_edges)),
        roles_(std::move(roles)),
        adj_(n, vertex_set(n)),
        degree_(n, 0) {
    for (const edge& e : edges_) {
      adj_[e.u].set(e.v);
      adj_[e.v].set(e.u);
      ++degree_[e.u];
      ++degree_[e.v];
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges sorted with u < v, lexicographically.
  const std::vector<edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    return u != v && u >= 0 && v >= 0 && u < n_ && v < n_ && adj_[u].test(v);
  }

  /// Index of (u,v) in edges(), or -1.
  int edge_index(int u, int v) const {
    if (!has_edge(u, v)) return -1;
    edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
  }

  const vertex_set& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return degree_[v]; }

  const role_map& roles() const { return roles_; }
  bool has_role(const std::string& name) const { return roles_.count(name) > 0; }
  const std::vector<int>& role(const std::string& name) const {
    auto it = roles_.find(name);
    if (it == roles_.end()) throw std::invalid_argument("unknown role: " + name);
    return it->second;
  }

  /// Same graph with one role added or replaced.
  graph with_role(const std::string& name, std::vector<int> verts) const {
    for (int v : verts)
      if (v < 0 || v >= n_) throw std::invalid_argument("role vertex out of range");
    std::sort(verts.begin(), verts.end());
    graph g = *this;
    g.roles_[name] = std::move(verts);
    return g;
  }

  graph without_edge(const edge& e) const {
    std::vector<edge> es;
    es.reserve(edges_.size());
    for (const edge& x : edges_)
      if (!(x == e)) es.push_back(x);
    return graph(n_, std::move(es), roles_);
  }

  graph with_edge(const edge& e) const {
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.u < 0 || e.v >= n_) throw std::invalid_argument("vertex out of range");
    if (has_edge(e.u, e.v)) return *this;
    std::vector<edge> es = edges_;
    es.insert(std::lower_bound(es.begin(), es.end(), e), e);
    return graph(n_, std::move(es), roles_);
  }

 private:
  int n_ = 0;
  std::vector<edge> edges_;
  role_map roles_;
  std::vector<vertex_set> adj_;
  std::vector<int> degree_;
};

/// Structural equality on (n, edge set); roles are ignored.
inline bool same_graph(const graph& a, const graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

/// True when every edge of a is an edge of b (same labels, a.n <= b.n).
inline bool subgraph_of(const graph& a, const graph& b) {
  if (a.vertex_count() > b.vertex_count()) return false;
  for (const edge& e : a.edges())
    if (!b.has_edge(e.u, e.v)) return false;
  return true;
}

/// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
/// out-of-range endpoints are rejected.
inline graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list,
                         role_map roles = {}) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::set<edge> es;
  for (auto [u, v] : edge_list) {
    if (u == v) throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("vertex out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
    es.insert(edge(u, v));
  }
  for (auto& [name, verts] : roles) {
    for (int v : verts)
      if (v < 0 || v >= n)
        throw std::invalid_argument("role '" + name + "' lists vertex out of range");
    std::sort(verts.begin(), verts.end());
  }
  return graph(n, std::vector<edge>(es.begin(), es.end()), std::move(roles));
}

/// Incremental builder used by the construction generators.
class graph_builder {
 public:
  explicit graph_builder(int n = 0) : n_(n) {}

  int add_vertex() { return n_++; }
  int add_vertices(int k) {
    int first = n_;
    n_ += k;
    return first;
  }
  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("vertex out of range");
    edges_.insert(edge(u, v));
  }
  bool has_edge(int u, int v) const { return edges_.count(edge(u, v)) > 0; }
  void set_role(const std::string& name, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    roles_[name] = std::move(verts);
  }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  graph build() const {
    for (auto& [name, verts] : roles_)
      for (int v : verts)
        if (v < 0 || v >= n_)
          throw std::invalid_argument("role '" + name + "' lists vertex out of range");
    return graph(n_, std::vector<edge>(edges_.begin(), edges_.end()), roles_);
  }

 private:
  int n_;
  std::set<edge> edges_;
  role_map roles_;
};

inline graph complete_graph(int n) {
  graph_builder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  graph_builder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

inline graph path_graph(int n) {
  graph_builder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline graph petersen_graph() {
  graph_builder b(10);
  for (int v = 0; v < 5; ++v) {
    b.add_edge(v, (v + 1) % 5);
    b.add_edge(v, v + 5);
    b.add_edge(5 + v, 5 + (v + 2) % 5);
  }
  return b.build();
}

/// Disjoint union of parts plus all cross edges between every pair of
/// distinct parts. Roles "part_i" (1-based) record each part's vertices;
/// original roles survive namespaced as "part_i.<name>".
inline graph join_graphs(const std::vector<graph>& parts) {
  if (parts.empty()) throw std::invalid_argument("join of zero parts");
  graph_builder b;
  std::vector<int> offset(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offset[i] = b.add_vertices(parts[i].vertex_count());
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const edge& e : parts[i].edges()) b.add_edge(offset[i] + e.u, offset[i] + e.v);
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (int u = 0; u < parts[i].vertex_count(); ++u)
        for (int v = 0; v < parts[j].vertex_count(); ++v)
          b.add_edge(offset[i] + u, offset[j] + v);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string prefix = "part_" + std::to_string(i + 1);
    std::vector<int> own(parts[i].vertex_count());
    for (int v = 0; v < parts[i].vertex_count(); ++v) own[v] = offset[i] + v;
    b.set_role(prefix, own);
    for (const auto& [name, verts] : parts[i].roles()) {
      std::vector<int> shifted;
      shifted.reserve(verts.size());
      for (int v : verts) shifted.push_back(offset[i] + v);
      b.set_role(prefix + "." + name, shifted);
    }
  }
  return b.build();
}

struct induced_result {
  graph g;
  std::vector<int> vertex_map;  // new label -> original label
};

/// Subgraph induced by s, relabeled to 0..|s|-1 in ascending original order.
/// Roles restrict to s; roles that become empty are dropped.
inline induced_result induced_subgraph(const graph& g, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  std::vector<int> to_new(g.vertex_count(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) to_new[s[i]] = static_cast<int>(i);
  graph_builder b(static_cast<int>(s.size()));
  for (const edge& e : g.edges())
    if (to_new[e.u] >= 0 && to_new[e.v] >= 0) b.add_edge(to_new[e.u], to_new[e.v]);
  for (const auto& [name, verts] : g.roles()) {
    std::vector<int> kept;
    for (int v : verts)
      if (to_new[v] >= 0) kept.push_back(to_new[v]);
    if (!kept.empty()) b.set_role(name, kept);
  }
  return {b.build(), std::move(s)};
}

/// Vertices of degree zero removed, remaining vertices relabeled in order.
inline induced_result strip_isolated(const graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace rforge
