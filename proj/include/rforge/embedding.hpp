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

#include <optional>
#include <vector>

#include "rforge/graph.hpp"

namespace rforge {

/// Injective vertex map witnessing a (not necessarily induced) copy of a
/// pattern graph inside a host graph. map[p] is the host image of pattern
/// vertex p.
struct embedding {
  std::vector<int> map;
};

/// Checks injectivity and edge preservation directly.
inline bool is_valid_embedding(const graph& h, const graph& g, const embedding& emb) {
  if (static_cast<int>(emb.map.size()) != h.vertex_count()) return false;
  std::vector<char> used(g.vertex_count(), 0);
  for (int img : emb.map) {
    if (img < 0 || img >= g.vertex_count() || used[img]) return false;
    used[img] = 1;
  }
  for (const edge& e : h.edges())
    if (!g.has_edge(emb.map[e.u], emb.map[e.v])) return false;
  return true;
}

namespace detail {

/// Host access used by the backtracker. Any type with vertex_count(),
/// neighbors(v) -> vertex_set usable with &=, and degree(v) works; the
/// arrowing engine feeds in live color-class adjacency this way.
template <typename HostView>
bool embed_rec(const graph& h, const HostView& g, const std::vector<int>& order,
               std::size_t depth, std::vector<int>& map, vertex_set& used) {
  if (depth == order.size()) return true;
  int p = order[depth];
  vertex_set cand(g.vertex_count());
  bool anchored = false;
  for (std::size_t i = 0; i < depth; ++i) {
    int q = order[i];
    if (!h.has_edge(p, q)) continue;
    if (!anchored) {
      cand = g.neighbors(map[q]);
      anchored = true;
    } else {
      cand &= g.neighbors(map[q]);
    }
  }
  if (!anchored) cand.set_all();
  cand.subtract(used);
  for (int w = cand.first(); w >= 0; w = cand.next(w)) {
    if (g.degree(w) < h.degree(p)) continue;
    map[p] = w;
    used.set(w);
    if (embed_rec(h, g, order, depth + 1, map, used)) return true;
    used.reset(w);
    map[p] = -1;
  }
  return false;
}

/// Ordering for the unplaced pattern vertices when some are pinned up front.
inline std::vector<int> pattern_order_seeded(const graph& h, const std::vector<char>& seeded) {
  int k = h.vertex_count();
  std::vector<int> order;
  std::vector<char> placed = seeded;
  std::vector<int> anchors;
  for (int v = 0; v < k; ++v)
    if (placed[v]) anchors.push_back(v);
  while (static_cast<int>(order.size() + anchors.size()) < k) {
    int best = -1, best_conn = -1, best_deg = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int conn = 0;
      for (int u = 0; u < k; ++u)
        if (placed[u] && h.has_edge(u, v)) ++conn;
      if (conn > best_conn || (conn == best_conn && h.degree(v) > best_deg)) {
        best = v;
        best_conn = conn;
        best_deg = h.degree(v);
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  return order;
}

/// Pinned embedding over an arbitrary host view. Pins fix pattern→host
/// images before the search; conflicting pins simply fail (no copy extends
/// them), malformed pins throw.
template <typename HostView>
std::optional<embedding> find_embedding_pinned_view(
    const graph& h, const HostView& g, const std::vector<std::pair<int, int>>& pins) {
  int k = h.vertex_count();
  if (k > g.vertex_count()) return std::nullopt;
  std::vector<int> map(k, -1);
  vertex_set used(g.vertex_count());
  std::vector<char> seeded(k, 0);
  std::vector<int> order;
  order.reserve(k);
  for (auto [p, w] : pins) {
    if (p < 0 || p >= k || w < 0 || w >= g.vertex_count())
      throw std::invalid_argument("embedding pin out of range");
    if (seeded[p]) throw std::invalid_argument("embedding pin repeats a pattern vertex");
    if (used.test(w)) return std::nullopt;
    if (g.degree(w) < h.degree(p)) return std::nullopt;
    seeded[p] = 1;
    map[p] = w;
    used.set(w);
    order.push_back(p);
  }
  for (const edge& e : h.edges())
    if (seeded[e.u] && seeded[e.v] && !g.neighbors(map[e.u]).test(map[e.v]))
      return std::nullopt;
  std::vector<int> rest = pattern_order_seeded(h, seeded);
  order.insert(order.end(), rest.begin(), rest.end());
  if (embed_rec(h, g, order, pins.size(), map, used)) return embedding{std::move(map)};
  return std::nullopt;
}

}  // namespace detail

/// First subgraph embedding of h into g in a fixed deterministic search
/// order (most-constrained pattern vertex first), or absent.
inline std::optional<embedding> find_embedding(const graph& h, const graph& g) {
  if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())
    return std::nullopt;
  if (h.vertex_count() == 0) return embedding{};
  return detail::find_embedding_pinned_view(h, g, {});
}

/// Embedding that honors pins (pattern vertex, host vertex) fixed up front.
inline std::optional<embedding> find_embedding_pinned(
    const graph& h, const graph& g, const std::vector<std::pair<int, int>>& pins) {
  if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())
    return std::nullopt;
  if (h.vertex_count() == 0) return embedding{};
  return detail::find_embedding_pinned_view(h, g, pins);
}

inline bool contains_copy(const graph& h, const graph& g) {
  return find_embedding(h, g).has_value();
}

}  // namespace rforge
