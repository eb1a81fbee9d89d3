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
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rforge/graph.hpp"

namespace rforge {

/// Canonical form: the lexicographically smallest adjacency-entry string over
/// all vertex orders compatible with the refined color partition. A complete
/// isomorphism invariant (the string reconstructs the graph).
using canon_string = std::vector<std::uint8_t>;

namespace detail {

/// Iterated color refinement. Starts from one class and splits by the
/// multiset of (edge label, neighbor color) pairs; new ids follow the sorted
/// signature order, so the result is label-independent.
template <typename LabelFn>
std::vector<int> refine_colors(int n, LabelFn&& lab) {
  std::vector<int> color(n, 0);
  int classes = 1;
  while (true) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<std::vector<int>> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nbrs;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        int l = lab(u, v);
        if (l != 0) nbrs.emplace_back(l, color[u]);
      }
      std::sort(nbrs.begin(), nbrs.end());
      std::vector<int> sig{color[v]};
      for (auto [l, c] : nbrs) {
        sig.push_back(l);
        sig.push_back(c);
      }
      sigs[v] = std::move(sig);
      sig_ids.emplace(sigs[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : sig_ids) id = next++;
    if (next == classes) break;
    classes = next;
    for (int v = 0; v < n; ++v) color[v] = sig_ids[sigs[v]];
  }
  return color;
}

template <typename LabelFn>
class canon_search {
 public:
  canon_search(int n, LabelFn lab) : n_(n), lab_(lab) {}

  canon_string run() {
    if (n_ == 0) return {};
    std::vector<int> color = refine_colors(n_, lab_);
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    cells_.assign(classes, {});
    for (int v = 0; v < n_; ++v) cells_[color[v]].push_back(v);
    pos_color_.reserve(n_);
    for (int c = 0; c < classes; ++c)
      for (std::size_t i = 0; i < cells_[c].size(); ++i) pos_color_.push_back(c);

    perm_.assign(n_, -1);
    used_.assign(n_, 0);
    cur_.reserve(n_ * (n_ - 1) / 2);
    seed_leftmost();
    dfs(0, 0);
    return best_;
  }

 private:
  // First leaf (ascending labels within each cell) seeds best so the search
  // can prune by prefix comparison everywhere else.
  void seed_leftmost() {
    std::vector<int> perm;
    perm.reserve(n_);
    for (auto& cell : cells_)
      for (int v : cell) perm.push_back(v);
    best_.reserve(n_ * (n_ - 1) / 2);
    for (int k = 0; k < n_; ++k)
      for (int j = 0; j < k; ++j)
        best_.push_back(static_cast<std::uint8_t>(lab_(perm[k], perm[j])));
  }

  void dfs(int k, int cmp) {
    if (k == n_) {
      if (cmp < 0) best_ = cur_;
      return;
    }
    std::size_t row_start = cur_.size();
    for (int v : cells_[pos_color_[k]]) {
      if (used_[v]) continue;
      int child = cmp;
      for (int j = 0; j < k; ++j)
        cur_.push_back(static_cast<std::uint8_t>(lab_(v, perm_[j])));
      if (child == 0) {
        for (int j = 0; j < k && child == 0; ++j) {
          std::uint8_t mine = cur_[row_start + j];
          std::uint8_t ref = best_[row_start + j];
          if (mine < ref) child = -1;
          else if (mine > ref) child = 1;
        }
      }
      if (child <= 0) {
        perm_[k] = v;
        used_[v] = 1;
        dfs(k + 1, child);
        used_[v] = 0;
      }
      cur_.resize(row_start);
    }
  }

  int n_;
  LabelFn lab_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> pos_color_;
  std::vector<int> perm_;
  std::vector<char> used_;
  canon_string cur_, best_;
};

inline std::uint64_t fnv1a(std::uint64_t seed, const std::uint8_t* data, std::size_t len) {
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

inline canon_string canonical_form(const graph& g) {
  auto lab = [&](int u, int v) { return g.has_edge(u, v) ? 1 : 0; };
  return detail::canon_search<decltype(lab)>(g.vertex_count(), lab).run();
}

/// Canonical form of an edge-labeled graph. edge_labels is indexed like
/// g.edges() and every value must be nonzero (zero means non-edge).
inline canon_string canonical_form_colored(const graph& g,
                                           const std::vector<std::uint8_t>& edge_labels) {
  if (edge_labels.size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("edge label count mismatch");
  int n = g.vertex_count();
  std::vector<std::uint8_t> mat(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t i = 0; i < edge_labels.size(); ++i) {
    const edge& e = g.edges()[i];
    mat[static_cast<std::size_t>(e.u) * n + e.v] = edge_labels[i];
    mat[static_cast<std::size_t>(e.v) * n + e.u] = edge_labels[i];
  }
  auto lab = [&](int u, int v) {
    return static_cast<int>(mat[static_cast<std::size_t>(u) * n + v]);
  };
  return detail::canon_search<decltype(lab)>(n, lab).run();
}

/// Equal digests for isomorphic graphs; different digests certify
/// non-isomorphism.
inline std::uint64_t canonical_hash(const graph& g) {
  canon_string s = canonical_form(g);
  std::uint64_t h = 14695981039346656037ULL ^ (0x9e3779b97f4a7c15ULL * (g.vertex_count() + 1));
  return detail::fnv1a(h, s.data(), s.size());
}

inline std::uint64_t canonical_hash_colored(const graph& g,
                                            const std::vector<std::uint8_t>& edge_labels) {
  canon_string s = canonical_form_colored(g, edge_labels);
  std::uint64_t h = 14695981039346656037ULL ^ (0x9e3779b97f4a7c15ULL * (g.vertex_count() + 1));
  return detail::fnv1a(h, s.data(), s.size());
}

}  // namespace rforge
