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

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rforge/canonical.hpp"
#include "rforge/coloring.hpp"
#include "rforge/embedding.hpp"
#include "rforge/graph.hpp"
#include "rforge/stats.hpp"

namespace rforge {

// ---------------------------------------------------------------------------
// Results, budgets, errors

enum class arrow_verdict { arrows, not_arrows };

struct arrow_stats {
  long long nodes = 0;   // color assignments tried
  long long prunes = 0;  // branches cut by a completed monochromatic copy
  double wall_ms = 0.0;
};

struct arrowing_result {
  arrow_verdict verdict = arrow_verdict::not_arrows;
  std::optional<edge_coloring> witness;  // present iff not_arrows
  arrow_stats stats;
};

/// Search limits and execution knobs. Exceeding a limit raises
/// budget_exhausted_error — never a guessed verdict.
struct arrow_budget {
  long long max_nodes = 4'000'000'000LL;
  int timeout_ms = 0;  // 0 = no time limit
  int threads = 1;
  bool deterministic = false;   // forces the canonical sequential order
  bool symmetry_break = true;   // first branching edge fixed Red
  bool orbit_reduction = false; // shallow isomorph rejection, sequential only
};

class engine_error : public std::runtime_error {
 public:
  explicit engine_error(const std::string& what) : std::runtime_error(what) {}
};

class budget_exhausted_error : public engine_error {
 public:
  explicit budget_exhausted_error(const std::string& what) : engine_error(what) {}
};

class not_disjoint_error : public engine_error {
 public:
  explicit not_disjoint_error(const std::string& what) : engine_error(what) {}
};

class graph_arrows_h_error : public engine_error {
 public:
  explicit graph_arrows_h_error(const std::string& what) : engine_error(what) {}
};

class does_not_arrow_error : public engine_error {
 public:
  explicit does_not_arrow_error(const std::string& what) : engine_error(what) {}
};

class no_arrowing_candidate_error : public engine_error {
 public:
  explicit no_arrowing_candidate_error(const std::string& what) : engine_error(what) {}
};

namespace detail {

// ---------------------------------------------------------------------------
// Mutable two-class adjacency maintained along the search path.

struct color_state {
  int n = 0;
  std::vector<vertex_set> adj[2];
  std::vector<int> deg[2];

  explicit color_state(int n_) : n(n_) {
    for (int c = 0; c < 2; ++c) {
      adj[c].assign(n, vertex_set(n));
      deg[c].assign(n, 0);
    }
  }

  void add(int c, int u, int v) {
    adj[c][u].set(v);
    adj[c][v].set(u);
    ++deg[c][u];
    ++deg[c][v];
  }

  void remove(int c, int u, int v) {
    adj[c][u].reset(v);
    adj[c][v].reset(u);
    --deg[c][u];
    --deg[c][v];
  }
};

struct class_view {
  const color_state* st;
  int c;
  int vertex_count() const { return st->n; }
  const vertex_set& neighbors(int v) const { return st->adj[c][v]; }
  int degree(int v) const { return st->deg[c][v]; }
};

/// Does the class-c graph contain a copy of h through host edge (u,v)?
/// Called right after (u,v) is added, so a hit means the new edge completed
/// a monochromatic copy: the standard incremental prune.
inline bool completes_mono(const graph& h, const color_state& st, int c, int u, int v) {
  class_view view{&st, c};
  for (const edge& he : h.edges()) {
    if (detail::find_embedding_pinned_view(h, view, {{he.u, u}, {he.v, v}})) return true;
    if (detail::find_embedding_pinned_view(h, view, {{he.u, v}, {he.v, u}})) return true;
  }
  return false;
}

/// Edges in branching order: degree-sum descending so the dense region is
/// constrained first, ties by edge index (lexicographic endpoints).
inline std::vector<int> branch_order(const graph& f) {
  std::vector<int> order(f.edge_count());
  for (int i = 0; i < f.edge_count(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const edge& ea = f.edges()[a];
    const edge& eb = f.edges()[b];
    return f.degree(ea.u) + f.degree(ea.v) > f.degree(eb.u) + f.degree(eb.v);
  });
  return order;
}

using clock_type = std::chrono::steady_clock;

/// Shared counters and latches for one decision run. Also used by the
/// sequential path (single thread, zero contention).
struct search_shared {
  std::atomic<long long> nodes{0};
  std::atomic<long long> prunes{0};
  std::atomic<bool> witness_found{false};
  std::atomic<bool> budget_hit{false};
  std::mutex witness_mu;
  std::optional<std::vector<color>> witness;
  long long max_nodes = 0;
  bool has_deadline = false;
  clock_type::time_point deadline{};

  bool note_node() {  // returns false when the budget is gone
    long long seen = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > max_nodes) {
      budget_hit.store(true, std::memory_order_relaxed);
      return false;
    }
    if (has_deadline && (seen & 511) == 0 && clock_type::now() > deadline) {
      budget_hit.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void offer_witness(const std::vector<color>& colors) {
    std::lock_guard<std::mutex> lock(witness_mu);
    if (!witness) witness = colors;
    witness_found.store(true, std::memory_order_release);
  }
};

/// One depth-first searcher over a fixed branching order. Several instances
/// may run over disjoint prefix subtrees sharing the same counters.
class mono_free_search {
 public:
  mono_free_search(const graph& f, const graph& h, const std::vector<int>& order,
                   const std::vector<int>& forced, search_shared& shared, bool orbit_reduction)
      : f_(f),
        h_(h),
        order_(order),
        forced_(forced),
        shared_(shared),
        orbit_reduction_(orbit_reduction),
        state_(f.vertex_count()),
        colors_(f.edge_count(), color::red) {
    if (orbit_reduction_) {
      orbit_depth_ = std::min<std::size_t>(5, order_.size());
      seen_.resize(orbit_depth_);
    }
  }

  /// Replays an already-validated color prefix (used by subtree workers).
  void load_prefix(const std::vector<color>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const edge& e = f_.edges()[order_[i]];
      colors_[order_[i]] = prefix[i];
      state_.add(static_cast<int>(prefix[i]), e.u, e.v);
    }
    start_depth_ = prefix.size();
  }

  /// True when a mono-free completion exists (already offered to shared_).
  bool run() { return dfs(start_depth_); }

 private:
  bool dfs(std::size_t depth) {
    if (shared_.witness_found.load(std::memory_order_acquire)) return false;
    if (shared_.budget_hit.load(std::memory_order_relaxed)) return false;
    if (depth == order_.size()) {
      shared_.offer_witness(colors_);
      return true;
    }
    int idx = order_[depth];
    const edge& e = f_.edges()[idx];
    int only = forced_[depth];
    for (int c = 0; c < 2; ++c) {
      if (only >= 0 && c != only) continue;
      if (!shared_.note_node()) return false;
      state_.add(c, e.u, e.v);
      if (completes_mono(h_, state_, c, e.u, e.v)) {
        shared_.prunes.fetch_add(1, std::memory_order_relaxed);
        state_.remove(c, e.u, e.v);
        continue;
      }
      colors_[idx] = static_cast<color>(c);
      if (orbit_reduction_ && depth + 1 <= orbit_depth_ && seen_partial(depth + 1)) {
        state_.remove(c, e.u, e.v);
        continue;
      }
      if (dfs(depth + 1)) {
        state_.remove(c, e.u, e.v);
        return true;
      }
      state_.remove(c, e.u, e.v);
      if (shared_.budget_hit.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  /// Isomorph rejection at shallow depths: two partial colorings of the same
  /// edge prefix with the same canonical edge-labeled form have isomorphic
  /// completion sets, so the second subtree can be skipped.
  bool seen_partial(std::size_t depth) {
    std::vector<std::uint8_t> labels(f_.edge_count(), 3);  // 3 = not yet colored
    for (std::size_t i = 0; i < depth; ++i)
      labels[order_[i]] = colors_[order_[i]] == color::red ? 1 : 2;
    canon_string key = canonical_form_colored(f_, labels);
    auto& bucket = seen_[depth - 1];
    for (const canon_string& s : bucket)
      if (s == key) return true;
    bucket.push_back(std::move(key));
    return false;
  }

  const graph& f_;
  const graph& h_;
  const std::vector<int>& order_;
  const std::vector<int>& forced_;  // per depth: -1 free, else the only color
  search_shared& shared_;
  bool orbit_reduction_;
  std::size_t orbit_depth_ = 0;
  std::vector<std::vector<canon_string>> seen_;
  color_state state_;
  std::vector<color> colors_;
  std::size_t start_depth_ = 0;
};

/// Enumerates the mono-free color prefixes of the first `depth` branching
/// positions; each one roots an independent subtree for a worker.
class prefix_enumerator {
 public:
  prefix_enumerator(const graph& f, const graph& h, const std::vector<int>& order,
                    const std::vector<int>& forced, std::size_t depth, search_shared& shared)
      : f_(f), h_(h), order_(order), forced_(forced), depth_(depth), shared_(shared),
        state_(f.vertex_count()) {}

  std::vector<std::vector<color>> run() {
    cur_.clear();
    out_.clear();
    expand(0);
    return std::move(out_);
  }

 private:
  void expand(std::size_t depth) {
    if (shared_.budget_hit.load(std::memory_order_relaxed)) return;
    if (depth == depth_) {
      out_.push_back(cur_);
      return;
    }
    int idx = order_[depth];
    const edge& e = f_.edges()[idx];
    int only = forced_[depth];
    for (int c = 0; c < 2; ++c) {
      if (only >= 0 && c != only) continue;
      if (!shared_.note_node()) return;
      state_.add(c, e.u, e.v);
      if (completes_mono(h_, state_, c, e.u, e.v)) {
        shared_.prunes.fetch_add(1, std::memory_order_relaxed);
      } else {
        cur_.push_back(static_cast<color>(c));
        expand(depth + 1);
        cur_.pop_back();
      }
      state_.remove(c, e.u, e.v);
    }
  }

  const graph& f_;
  const graph& h_;
  const std::vector<int>& order_;
  const std::vector<int>& forced_;
  std::size_t depth_;
  search_shared& shared_;
  color_state state_;
  std::vector<color> cur_;
  std::vector<std::vector<color>> out_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Arrowing decision

/// Decides f → h with some edges pinned to fixed colors beforehand.
/// The symmetry reduction is disabled whenever pins are present (a pinned
/// instance is not swap-symmetric). This is the shared core behind arrows,
/// sender checks, and template-forcing verification.
inline arrowing_result arrows_with_fixed_edges(
    const graph& f, const graph& h, const std::vector<std::pair<int, color>>& fixed,
    const arrow_budget& budget = {}) {
  if (h.edge_count() == 0) throw std::invalid_argument("target graph must have at least one edge");
  auto t0 = detail::clock_type::now();

  std::vector<int> order = detail::branch_order(f);
  std::vector<int> forced(order.size(), -1);
  std::vector<int> fixed_by_index(f.edge_count(), -1);
  for (auto [idx, c] : fixed) {
    if (idx < 0 || idx >= f.edge_count()) throw std::invalid_argument("fixed edge index out of range");
    fixed_by_index[idx] = static_cast<int>(c);
  }
  for (std::size_t d = 0; d < order.size(); ++d) forced[d] = fixed_by_index[order[d]];
  if (fixed.empty() && budget.symmetry_break && !order.empty() && forced[0] < 0)
    forced[0] = static_cast<int>(color::red);

  detail::search_shared shared;
  shared.max_nodes = budget.max_nodes;
  if (budget.timeout_ms > 0) {
    shared.has_deadline = true;
    shared.deadline = t0 + std::chrono::milliseconds(budget.timeout_ms);
  }

  int threads = std::max(1, budget.threads);
  bool sequential = budget.deterministic || threads == 1;

  if (sequential) {
    detail::mono_free_search search(f, h, order, forced, shared, budget.orbit_reduction);
    search.run();
  } else {
    std::size_t split = 0;
    while ((1LL << split) < 4LL * threads && split + 1 < order.size() && split < 10) ++split;
    detail::prefix_enumerator gen(f, h, order, forced, split, shared);
    std::vector<std::vector<color>> tasks = gen.run();
    if (!shared.budget_hit.load()) {
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          if (shared.witness_found.load(std::memory_order_acquire)) return;
          if (shared.budget_hit.load(std::memory_order_relaxed)) return;
          detail::mono_free_search search(f, h, order, forced, shared, false);
          search.load_prefix(tasks[i]);
          search.run();
        }
      };
      std::vector<std::thread> pool;
      int nworkers = std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1));
      for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }

  arrow_stats stats;
  stats.nodes = shared.nodes.load();
  stats.prunes = shared.prunes.load();
  stats.wall_ms = std::chrono::duration<double, std::milli>(detail::clock_type::now() - t0).count();

  if (shared.budget_hit.load() && !shared.witness_found.load()) {
    std::ostringstream msg;
    msg << "search budget exhausted after " << stats.nodes << " nodes";
    throw budget_exhausted_error(msg.str());
  }

  arrowing_result result;
  result.stats = stats;
  if (shared.witness) {
    result.verdict = arrow_verdict::not_arrows;
    result.witness = edge_coloring(f, *shared.witness);
  } else {
    result.verdict = arrow_verdict::arrows;
  }
  return result;
}

/// Does every red/blue coloring of f's edges contain a monochromatic copy
/// of h? Exact within budget; a not_arrows verdict carries a mono-free
/// witness coloring.
inline arrowing_result arrows(const graph& f, const graph& h, const arrow_budget& budget = {}) {
  return arrows_with_fixed_edges(f, h, {}, budget);
}

inline nlohmann::ordered_json arrowing_result_to_json(const arrowing_result& r,
                                                      bool include_time = true) {
  nlohmann::ordered_json j;
  j["verdict"] = r.verdict == arrow_verdict::arrows ? "Arrows" : "NotArrows";
  if (r.witness) j["witness"] = coloring_to_json(*r.witness);
  nlohmann::ordered_json stats;
  stats["nodes"] = r.stats.nodes;
  stats["prunes"] = r.stats.prunes;
  if (include_time) stats["wall_ms"] = r.stats.wall_ms;
  j["stats"] = std::move(stats);
  return j;
}

// ---------------------------------------------------------------------------
// Derived decision procedures

/// Every induced subgraph on at least eps·|V(f)| vertices arrows h.
/// Enumerates all qualifying subsets — desk scale only.
inline bool epsilon_arrows(const graph& f, const graph& h, double eps,
                           const arrow_budget& budget = {}) {
  if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("eps must lie in (0, 1]");
  int n = f.vertex_count();
  // Small slack keeps binary rounding of eps*n from bumping the threshold.
  int s_min = static_cast<int>(std::ceil(eps * n - 1e-9));
  if (s_min < 0) s_min = 0;
  for (int s = s_min; s <= n; ++s) {
    if (s == 0) return false;  // the empty subgraph cannot arrow
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      induced_result sub = induced_subgraph(f, pick);
      if (arrows(sub.g, h, budget).verdict == arrow_verdict::not_arrows) return false;
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

/// f arrows h, has no isolated vertices, and every single-edge deletion
/// stops arrowing. Edge deletions suffice: arrowing is monotone under
/// subgraphs, so any proper Ramsey subgraph would lie under some f−e, and
/// an isolated vertex could be dropped for a proper Ramsey subgraph too.
inline bool is_ramsey_minimal(const graph& f, const graph& h, const arrow_budget& budget = {}) {
  for (int v = 0; v < f.vertex_count(); ++v)
    if (f.degree(v) == 0) return false;
  if (arrows(f, h, budget).verdict != arrow_verdict::arrows) return false;
  for (const edge& e : f.edges()) {
    if (arrows(f.without_edge(e), h, budget).verdict == arrow_verdict::arrows) return false;
  }
  return true;
}

/// Greedy descent to a Ramsey-minimal subgraph: try deleting edges in
/// lexicographic order, keep deletions that preserve arrowing, then strip
/// isolated vertices. One pass is enough — once an edge becomes
/// undeletable it stays undeletable as the graph only shrinks.
inline graph extract_minimal_subgraph(const graph& f, const graph& h,
                                      const arrow_budget& budget = {}) {
  if (arrows(f, h, budget).verdict != arrow_verdict::arrows)
    throw does_not_arrow_error("input graph does not arrow the target");
  graph current = f;
  for (const edge& e : f.edges()) {
    graph smaller = current.without_edge(e);
    if (arrows(smaller, h, budget).verdict == arrow_verdict::arrows) current = std::move(smaller);
  }
  return strip_isolated(current).g;
}

/// Smallest n ≤ n_max with K_n → h, or absent.
inline std::optional<int> ramsey_number_desk(const graph& h, int n_max,
                                             const arrow_budget& budget = {}) {
  for (int n = 1; n <= n_max; ++n) {
    if (arrows(complete_graph(n), h, budget).verdict == arrow_verdict::arrows) return n;
  }
  return std::nullopt;
}

struct min_degree_search_result {
  int best = 0;
  graph witness;
};

/// Desk-scale upper-bound search: over the candidates that arrow h, extract
/// a Ramsey-minimal subgraph and take the smallest minimum degree seen.
/// The result only bounds the true minimum over all Ramsey-minimal graphs
/// from above — the universe is never exhaustive.
inline min_degree_search_result s_min_degree_witness_search(const graph& h,
                                                            const std::vector<graph>& universe,
                                                            const arrow_budget& budget = {}) {
  std::optional<min_degree_search_result> best;
  for (const graph& f : universe) {
    if (arrows(f, h, budget).verdict != arrow_verdict::arrows) continue;
    graph minimal = extract_minimal_subgraph(f, h, budget);
    int delta = graph_stats(minimal).min_degree;
    if (!best || delta < best->best) best = min_degree_search_result{delta, minimal};
  }
  if (!best) throw no_arrowing_candidate_error("no candidate graph arrows the target");
  return *best;
}

// ---------------------------------------------------------------------------
// Gadget certificates and verifiers

struct signal_sender_cert {
  graph g;
  edge e;
  edge f;
  graph h;
  bool verified = false;
  // A mono-free coloring of g (necessarily with psi(e) == psi(f) when the
  // sender property holds), when one is known.
  std::optional<edge_coloring> psi;
};

struct bel_gadget_cert {
  graph g;
  std::vector<edge> embedded;  // template edges inside g
  std::vector<color> psi;      // template colors, same order as embedded
  graph h;
  bool verified = false;
};

struct epsilon_component_cert {
  graph g;
  graph h;
  double eps = 1.0;
  bool verified = false;
};

/// Are the disjoint edges e and f forced to share a color in every
/// mono-free coloring of g? By swap symmetry it is enough to rule out
/// mono-free colorings with e red and f blue.
inline bool is_signal_sender(const graph& g, edge e, edge f, const graph& h,
                             const arrow_budget& budget = {}) {
  int ie = g.edge_index(e.u, e.v);
  int jf = g.edge_index(f.u, f.v);
  if (ie < 0 || jf < 0) throw std::invalid_argument("distinguished edges must belong to the graph");
  if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v)
    throw not_disjoint_error("distinguished edges must be vertex-disjoint");
  if (arrows(g, h, budget).verdict == arrow_verdict::arrows)
    throw graph_arrows_h_error("a sender must itself admit mono-free colorings");
  arrowing_result discordant = arrows_with_fixed_edges(
      g, h, {{ie, color::red}, {jf, color::blue}}, budget);
  return discordant.verdict == arrow_verdict::arrows;  // no discordant mono-free coloring
}

inline bool verify_signal_sender(signal_sender_cert& cert, const arrow_budget& budget = {}) {
  cert.verified = is_signal_sender(cert.g, cert.e, cert.f, cert.h, budget);
  return cert.verified;
}

/// Checks that (a) the gadget graph admits mono-free colorings at all and
/// (b) every mono-free coloring restricts on the embedded template to ψ or
/// its global swap. (b) is decided by pinning each other template pattern
/// in turn and asking for a mono-free completion; patterns whose first
/// template edge is blue are swaps of patterns already covered.
inline bool verify_bel_property(bel_gadget_cert& cert, const arrow_budget& budget = {}) {
  const graph& g = cert.g;
  if (cert.embedded.size() != cert.psi.size())
    throw std::invalid_argument("template color count must match template edge count");
  if (cert.embedded.empty()) throw std::invalid_argument("template must contain an edge");
  std::vector<int> idx;
  for (const edge& e : cert.embedded) {
    int i = g.edge_index(e.u, e.v);
    if (i < 0) throw std::invalid_argument("template edge missing from gadget graph");
    idx.push_back(i);
  }
  cert.verified = false;
  if (arrows(g, cert.h, budget).verdict == arrow_verdict::arrows) return false;

  std::size_t k = idx.size();
  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    if (mask & 1) continue;  // first template edge blue: the swap of a covered pattern
    std::vector<color> pattern(k);
    for (std::size_t i = 0; i < k; ++i)
      pattern[i] = (mask >> i) & 1 ? color::blue : color::red;
    bool is_psi = true, is_swap = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (pattern[i] != cert.psi[i]) is_psi = false;
      if (pattern[i] != other(cert.psi[i])) is_swap = false;
    }
    if (is_psi || is_swap) continue;
    std::vector<std::pair<int, color>> fixed;
    for (std::size_t i = 0; i < k; ++i) fixed.emplace_back(idx[i], pattern[i]);
    if (arrows_with_fixed_edges(g, cert.h, fixed, budget).verdict == arrow_verdict::not_arrows)
      return false;  // a mono-free coloring escapes the template
  }
  cert.verified = true;
  return true;
}

/// g plus a fresh vertex joined to the given vertices.
inline graph with_new_vertex_joined(const graph& g, const std::vector<int>& targets) {
  graph_builder b(g.vertex_count());
  for (const edge& e : g.edges()) b.add_edge(e.u, e.v);
  int apex = b.add_vertex();
  for (int v : targets) b.add_edge(apex, v);
  for (const auto& [name, verts] : g.roles()) b.set_role(name, verts);
  b.set_role("apex", {apex});
  return b.build();
}

inline bool apex_subset_creates_copy(const graph& g, const std::vector<int>& subset,
                                     const graph& h) {
  return contains_copy(h, with_new_vertex_joined(g, subset));
}

/// The two halves of the apex-gadget guarantee: g itself is h-free, yet
/// joining a new vertex to any d vertices of the independent set creates a
/// copy of h.
inline bool verify_apex_property(const graph& g, const std::vector<int>& s, int d, const graph& h,
                                 const arrow_budget& /*budget*/ = {}) {
  if (static_cast<int>(s.size()) < d) throw std::invalid_argument("independent set smaller than d");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j]))
        throw std::invalid_argument("distinguished set must be independent");
  if (contains_copy(h, g)) return false;
  int m = static_cast<int>(s.size());
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    std::vector<int> subset;
    for (int i : pick) subset.push_back(s[i]);
    if (!apex_subset_creates_copy(g, subset, h)) return false;
    int i = d - 1;
    while (i >= 0 && pick[i] == m - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

}  // namespace rforge
