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

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rforge/coloring.hpp"
#include "rforge/engine.hpp"
#include "rforge/graph.hpp"
#include "rforge/stats.hpp"

namespace rforge {

/// A generated graph together with its intended coloring, when the
/// construction defines one. Roles live on the graph. For the doubled
/// simplicity frame, psi's host deliberately leaves the apex edges out:
/// the surrounding argument quantifies over their colors.
struct colored_construction {
  graph g;
  std::optional<edge_coloring> psi;
};

namespace detail {

inline std::string tuple_suffix(const std::vector<int>& idx) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s << ",";
    s << idx[i];
  }
  s << ")";
  return s.str();
}

/// Advances a mixed-radix counter; false once it wraps.
inline bool next_tuple(std::vector<int>& tup, int radix) {
  for (int i = static_cast<int>(tup.size()) - 1; i >= 0; --i) {
    if (++tup[i] < radix) return true;
    tup[i] = 0;
  }
  return false;
}

/// Advances a strictly increasing index tuple over 0..m-1; false at the end.
inline bool next_subset(std::vector<int>& pick, int m) {
  int d = static_cast<int>(pick.size());
  int i = d - 1;
  while (i >= 0 && pick[i] == m - d + i) --i;
  if (i < 0) return false;
  ++pick[i];
  for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  return true;
}

}  // namespace detail

/// K_t on vertices 0..t-1 plus vertex t adjacent to the first d clique
/// vertices. Roles "clique" and "apex".
inline graph make_H_t_d(int t, int d) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  if (d < 0 || d > t) throw std::invalid_argument("apex degree must satisfy 0 <= d <= t");
  graph_builder b(t + 1);
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) b.add_edge(u, v);
  for (int i = 0; i < d; ++i) b.add_edge(t, i);
  std::vector<int> clique(t);
  for (int i = 0; i < t; ++i) clique[i] = i;
  b.set_role("clique", clique);
  b.set_role("apex", {t});
  return b.build();
}

/// d vertex-disjoint red K_t's T_1..T_d, all pairs joined completely blue,
/// plus one fresh blue clique S_T of size t-d for every transversal tuple
/// (one vertex from each T_i), joined completely blue to its tuple.
/// ψ: clique-internal edges red, everything else blue.
inline colored_construction make_clique_transversal_gadget(int t, int d) {
  if (d < 2 || d >= t) throw std::invalid_argument("parameters must satisfy 2 <= d < t");
  graph_builder b;
  std::vector<std::vector<int>> T(d);
  std::vector<int> clique_of;  // vertex -> clique id, -1 outside
  for (int i = 0; i < d; ++i) {
    int first = b.add_vertices(t);
    for (int x = 0; x < t; ++x) {
      T[i].push_back(first + x);
      clique_of.push_back(i);
      for (int y = 0; y < x; ++y) b.add_edge(first + y, first + x);
    }
    b.set_role("T_" + std::to_string(i + 1), T[i]);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int u : T[i])
        for (int v : T[j]) b.add_edge(u, v);

  // Transversal tuples in lexicographic order of their indices into T_1..T_d.
  std::vector<int> tup(d, 0);
  do {
    int first = b.add_vertices(t - d);
    std::vector<int> st;
    for (int x = 0; x < t - d; ++x) {
      st.push_back(first + x);
      clique_of.push_back(-1);
      for (int y = 0; y < x; ++y) b.add_edge(first + y, first + x);
    }
    for (int i = 0; i < d; ++i)
      for (int s : st) b.add_edge(T[i][tup[i]], s);
    b.set_role("S_T" + detail::tuple_suffix(tup), st);
  } while (detail::next_tuple(tup, t));

  graph g = b.build();
  std::vector<color> colors(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const edge& e = g.edges()[i];
    bool red = clique_of[e.u] >= 0 && clique_of[e.u] == clique_of[e.v];
    colors[i] = red ? color::red : color::blue;
  }
  return {g, edge_coloring(g, std::move(colors))};
}

/// The construction's graph plus one new vertex joined to the picked
/// vertices — exactly degree_per_part of them inside each named role.
inline graph attach_apex(const colored_construction& c,
                         const std::map<std::string, std::vector<int>>& picks,
                         int degree_per_part) {
  const graph& g = c.g;
  for (const auto& [role, verts] : picks) {
    if (!g.has_role(role)) throw std::invalid_argument("pick names unknown role '" + role + "'");
    if (static_cast<int>(verts.size()) != degree_per_part) {
      std::ostringstream msg;
      msg << "pick for role '" << role << "' must select exactly " << degree_per_part
          << " vertices, got " << verts.size();
      throw std::invalid_argument(msg.str());
    }
    const std::vector<int>& allowed = g.role(role);
    for (int v : verts) {
      if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
        std::ostringstream msg;
        msg << "picked vertex " << v << " lies outside role '" << role << "'";
        throw std::invalid_argument(msg.str());
      }
    }
    std::set<int> uniq(verts.begin(), verts.end());
    if (uniq.size() != verts.size())
      throw std::invalid_argument("pick for role '" + role + "' repeats a vertex");
  }
  graph_builder b(g.vertex_count());
  for (const edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const auto& [name, verts] : g.roles()) b.set_role(name, verts);
  int apex = b.add_vertex();
  for (const auto& [role, verts] : picks)
    for (int v : verts) b.add_edge(apex, v);
  b.set_role("apex", {apex});
  return b.build();
}

/// Join of the components and r0 (complete bipartite graphs between every
/// pair of parts). ψ: part-internal edges red, cross edges blue. Roles
/// "F_1".."F_k" for the components and "R_0" for the last part.
inline colored_construction make_join_gadget(const graph& r0, const std::vector<graph>& components,
                                             int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (static_cast<int>(components.size()) != t - 2) {
    std::ostringstream msg;
    msg << "need exactly t-2 = " << (t - 2) << " components, got " << components.size();
    throw std::invalid_argument(msg.str());
  }
  if (contains_copy(make_H_t_d(t, 2), r0))
    throw std::invalid_argument("r0 contains a copy of H_{t,2}");
  graph kt = complete_graph(t);
  for (std::size_t i = 0; i < components.size(); ++i)
    if (contains_copy(kt, components[i]))
      throw std::invalid_argument("component " + std::to_string(i + 1) + " contains a copy of K_t");

  std::vector<graph> parts = components;
  parts.push_back(r0);
  graph joined = join_graphs(parts);

  std::vector<int> part_of(joined.vertex_count(), -1);
  role_map roles;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::vector<int>& verts = joined.role("part_" + std::to_string(i + 1));
    for (int v : verts) part_of[v] = static_cast<int>(i);
    std::string name = i + 1 < parts.size() ? "F_" + std::to_string(i + 1) : "R_0";
    roles[name] = verts;
  }
  std::vector<std::pair<int, int>> edge_pairs;
  for (const edge& e : joined.edges()) edge_pairs.emplace_back(e.u, e.v);
  graph g = build_graph(joined.vertex_count(), edge_pairs, roles);

  std::vector<color> colors(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const edge& e = g.edges()[i];
    colors[i] = part_of[e.u] == part_of[e.v] ? color::red : color::blue;
  }
  return {g, edge_coloring(g, std::move(colors))};
}

/// Glues two senders for the same target by identifying the second sender's
/// e-edge with the first sender's f-edge (lower endpoint onto lower
/// endpoint). The result's distinguished edges are the first sender's e and
/// the second sender's f; their distance must come out ≥ 3, which gluing
/// two honest senders always achieves.
inline signal_sender_cert chain_senders(const signal_sender_cert& a,
                                        const signal_sender_cert& b) {
  if (!same_graph(a.h, b.h)) throw std::invalid_argument("senders target different graphs");
  auto disjoint = [](const edge& e, const edge& f) {
    return e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v;
  };
  if (!disjoint(a.e, a.f) || !disjoint(b.e, b.f))
    throw not_disjoint_error("each sender's distinguished edges must be vertex-disjoint");
  if (!a.g.has_edge(a.e.u, a.e.v) || !a.g.has_edge(a.f.u, a.f.v) ||
      !b.g.has_edge(b.e.u, b.e.v) || !b.g.has_edge(b.f.u, b.f.v))
    throw std::invalid_argument("distinguished edges must belong to their graphs");

  int base = a.g.vertex_count();
  std::vector<int> map(b.g.vertex_count(), -1);
  map[b.e.u] = a.f.u;
  map[b.e.v] = a.f.v;
  int fresh = base;
  for (int v = 0; v < b.g.vertex_count(); ++v)
    if (map[v] < 0) map[v] = fresh++;

  graph_builder builder(fresh);
  for (const edge& e : a.g.edges()) builder.add_edge(e.u, e.v);
  for (const edge& e : b.g.edges()) {
    edge glued(map[e.u], map[e.v]);
    if (glued == a.f) continue;  // the identified edge already exists
    if (builder.has_edge(glued.u, glued.v))
      throw std::invalid_argument("identification would create a multi-edge");
    builder.add_edge(glued.u, glued.v);
  }
  edge out_f(map[b.f.u], map[b.f.v]);
  builder.set_role("e", {a.e.u, a.e.v});
  builder.set_role("f", {out_f.u, out_f.v});
  signal_sender_cert out;
  out.g = builder.build();
  out.e = a.e;
  out.f = out_f;
  out.h = a.h;
  out.verified = false;

  int dist = edge_distance(out.g, out.e, out.f);
  if (dist >= 0 && dist < 3) {
    std::ostringstream msg;
    msg << "glued distinguished edges lie at distance " << dist << " < 3";
    throw std::invalid_argument(msg.str());
  }
  return out;
}

namespace detail {

/// A mono-free coloring of the sender graph giving both distinguished edges
/// the requested color. Uses the certificate's stored coloring when it fits,
/// otherwise derives one from the search engine.
inline edge_coloring sender_coloring(const signal_sender_cert& cert, color c,
                                     const arrow_budget& budget = {}) {
  int ie = cert.g.edge_index(cert.e.u, cert.e.v);
  int jf = cert.g.edge_index(cert.f.u, cert.f.v);
  if (ie < 0 || jf < 0) throw std::invalid_argument("distinguished edges must belong to the graph");
  if (cert.psi && same_graph(cert.psi->host(), cert.g) &&
      cert.psi->at_index(ie) == cert.psi->at_index(jf) && is_mono_free(*cert.psi, cert.h)) {
    return cert.psi->at_index(ie) == c ? *cert.psi : swap_colors(*cert.psi);
  }
  arrowing_result r = arrows_with_fixed_edges(cert.g, cert.h, {{ie, c}, {jf, c}}, budget);
  if (r.verdict == arrow_verdict::arrows)
    throw std::invalid_argument(
        "sender admits no mono-free coloring with its distinguished edges in one color");
  return *r.witness;
}

}  // namespace detail

/// Frame forcing all of g0's edges into one color: fresh edges e_0 and e_1,
/// a sender copy tying e_0 to every edge of g0 and e_1 to every edge of g1.
/// ψ realizes the red-g0 / blue-g1 intent, extending into each sender copy
/// by a mono-free sender coloring with matching edge colors.
inline colored_construction make_weak_bel_frame(const graph& g0, const graph& g1,
                                                const signal_sender_cert& sender,
                                                const arrow_budget& budget = {}) {
  if (g0.vertex_count() != g1.vertex_count())
    throw std::invalid_argument("base graphs must share one vertex set");
  for (const edge& e : g0.edges())
    if (g1.has_edge(e.u, e.v)) throw std::invalid_argument("base graphs must be edge-disjoint");
  const graph& h = sender.h;
  if (contains_copy(h, g0)) throw std::invalid_argument("g0 already contains the target graph");
  if (contains_copy(h, g1)) throw std::invalid_argument("g1 already contains the target graph");
  if (!sender.verified)
    throw std::invalid_argument("sender certificate must be verified before use");
  int sep = edge_distance(sender.g, sender.e, sender.f);
  if (sep >= 0 && sep < 3)
    throw std::invalid_argument(
        "sender's distinguished edges must lie at distance >= 3, or copies would share edges");

  edge_coloring red_psi = detail::sender_coloring(sender, color::red, budget);
  edge_coloring blue_psi = swap_colors(red_psi);

  int n = g0.vertex_count();
  graph_builder b(n);
  std::map<edge, color> planned;
  for (const edge& e : g0.edges()) {
    b.add_edge(e.u, e.v);
    planned[e] = color::red;
  }
  for (const edge& e : g1.edges()) {
    b.add_edge(e.u, e.v);
    planned[e] = color::blue;
  }
  int p0 = b.add_vertices(2);
  b.add_edge(p0, p0 + 1);
  planned[edge(p0, p0 + 1)] = color::red;
  b.set_role("e_0", {p0, p0 + 1});
  int p1 = b.add_vertices(2);
  b.add_edge(p1, p1 + 1);
  planned[edge(p1, p1 + 1)] = color::blue;
  b.set_role("e_1", {p1, p1 + 1});

  auto glue_copy = [&](const edge& target, int ep, const edge_coloring& psi,
                       const std::string& role) {
    std::vector<int> map(sender.g.vertex_count(), -1);
    map[sender.e.u] = ep;
    map[sender.e.v] = ep + 1;
    map[sender.f.u] = target.u;
    map[sender.f.v] = target.v;
    for (int v = 0; v < sender.g.vertex_count(); ++v)
      if (map[v] < 0) map[v] = b.add_vertex();
    for (int i = 0; i < sender.g.edge_count(); ++i) {
      const edge& se = sender.g.edges()[i];
      edge img(map[se.u], map[se.v]);
      color c = psi.at_index(i);
      auto it = planned.find(img);
      if (it != planned.end()) {
        if (it->second != c)
          throw std::invalid_argument("sender copies disagree on a shared edge color");
        continue;
      }
      b.add_edge(img.u, img.v);
      planned[img] = c;
    }
    std::vector<int> verts;
    for (int v : map) verts.push_back(v);
    b.set_role(role, verts);
  };

  for (const edge& e : g0.edges())
    glue_copy(e, p0, red_psi, "sender_e0" + detail::tuple_suffix({e.u, e.v}));
  for (const edge& e : g1.edges())
    glue_copy(e, p1, blue_psi, "sender_e1" + detail::tuple_suffix({e.u, e.v}));

  graph g = b.build();
  std::vector<color> colors(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) colors[i] = planned.at(g.edges()[i]);
  return {g, edge_coloring(g, std::move(colors))};
}

struct strong_frame_pair {
  graph g0;
  graph g1;
};

/// Splits a colored graph into the two base graphs of the strong frame:
/// g0 keeps the blue edges and gains a fresh vertex set S carrying h minus
/// its first edge; g1 keeps the red edges and gains the one missing S-edge.
/// If the two ever end up monochromatic in the same color, S carries a
/// monochromatic copy of h.
inline strong_frame_pair weak_to_strong_frame(const graph& g, const edge_coloring& psi,
                                              const graph& h) {
  if (!is_connected(h)) throw std::invalid_argument("target graph must be connected");
  if (h.edge_count() == 0) throw std::invalid_argument("target graph must have an edge");
  if (!same_graph(psi.host(), g))
    throw std::invalid_argument("coloring host must be the given graph");

  int n = g.vertex_count();
  int k = h.vertex_count();
  edge missing = h.edges()[0];

  graph_builder b0(n), b1(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    const edge& e = g.edges()[i];
    (psi.at_index(i) == color::blue ? b0 : b1).add_edge(e.u, e.v);
  }
  int s0 = b0.add_vertices(k);
  int s1 = b1.add_vertices(k);
  std::vector<int> s_role;
  for (int i = 0; i < k; ++i) s_role.push_back(n + i);
  for (const edge& e : h.edges())
    if (!(e == missing)) b0.add_edge(s0 + e.u, s0 + e.v);
  b1.add_edge(s1 + missing.u, s1 + missing.v);
  b0.set_role("S", s_role);
  b1.set_role("S", s_role);

  strong_frame_pair out{b0.build(), b1.build()};
  if (contains_copy(h, out.g0))
    throw std::invalid_argument("blue side contains the target graph; the input coloring is bad");
  if (contains_copy(h, out.g1))
    throw std::invalid_argument("red side contains the target graph; the input coloring is bad");
  return out;
}

/// Independent set S of size 2d-1 plus, for every d-subset S' of S, a fresh
/// copy of h-v whose N(v) slots are identified onto S' (both in ascending
/// order). No ψ: the gadget is a bare graph with roles "S" and one role per
/// copy.
inline colored_construction make_apex_gadget(const graph& h, int v) {
  int n = h.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  if (n == 0 || h.edge_count() == 0) throw std::invalid_argument("graph must have edges");
  int d = h.degree(v);
  for (int u = 0; u < n; ++u)
    if (h.degree(u) != d) throw std::invalid_argument("graph must be regular");
  if (d < 1) throw std::invalid_argument("graph must be regular of degree at least 1");
  std::vector<int> nv = h.neighbors(v).to_vector();
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (std::size_t j = i + 1; j < nv.size(); ++j)
      if (h.has_edge(nv[i], nv[j]))
        throw std::invalid_argument("the neighborhood of v must be independent");
  std::vector<int> rest;
  for (int u = 0; u < n; ++u)
    if (u != v && !h.neighbors(v).test(u)) rest.push_back(u);
  if (!is_connected(induced_subgraph(h, rest).g))
    throw std::invalid_argument("removing v and its neighborhood must leave a connected graph");

  int s_size = 2 * d - 1;
  graph_builder b(s_size);
  std::vector<int> s_role(s_size);
  for (int i = 0; i < s_size; ++i) s_role[i] = i;
  b.set_role("S", s_role);

  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  do {
    int fresh = b.add_vertices(n - 1 - d);
    std::vector<int> map(n, -1);
    int at_nv = 0, at_fresh = 0;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      if (h.neighbors(v).test(u))
        map[u] = pick[at_nv++];  // ascending N(v) onto ascending S'
      else
        map[u] = fresh + at_fresh++;
    }
    for (const edge& e : h.edges()) {
      if (e.u == v || e.v == v) continue;
      b.add_edge(map[e.u], map[e.v]);
    }
    std::vector<int> verts;
    for (int u = 0; u < n; ++u)
      if (u != v) verts.push_back(map[u]);
    b.set_role("copy" + detail::tuple_suffix(pick), verts);
  } while (detail::next_subset(pick, s_size));

  return {b.build(), std::nullopt};
}

/// Two apex-gadget copies sharing S — one red, one blue under ψ — plus an
/// apex vertex joined to all of S. ψ's host leaves the apex edges uncolored
/// on purpose: any d same-colored apex edges complete a monochromatic h
/// through the same-colored copy. With a certificate, the doubled colored
/// frame must match the certificate's embedded template, and the apex
/// attaches to the certificate graph's S role instead.
inline colored_construction make_simplicity_witness(
    const graph& h, int v, const std::optional<bel_gadget_cert>& bel = std::nullopt) {
  colored_construction gadget = make_apex_gadget(h, v);
  int d = h.degree(v);
  int s_size = 2 * d - 1;
  int internal = gadget.g.vertex_count() - s_size;

  graph_builder b(s_size);
  std::vector<int> s_role(s_size);
  for (int i = 0; i < s_size; ++i) s_role[i] = i;
  b.set_role("S", s_role);

  std::map<edge, color> planned;
  auto add_gadget_copy = [&](const std::string& prefix, color c) {
    int offset = b.add_vertices(internal);
    auto remap = [&](int x) { return x < s_size ? x : offset + (x - s_size); };
    for (const edge& e : gadget.g.edges()) {
      edge img(remap(e.u), remap(e.v));
      b.add_edge(img.u, img.v);
      planned[img] = c;
    }
    for (const auto& [name, verts] : gadget.g.roles()) {
      if (name == "S") continue;
      std::vector<int> mapped;
      for (int x : verts) mapped.push_back(remap(x));
      b.set_role(prefix + "." + name, mapped);
    }
  };
  add_gadget_copy("red", color::red);
  add_gadget_copy("blue", color::blue);

  int apex = b.add_vertex();
  for (int s : s_role) b.add_edge(apex, s);
  b.set_role("apex", {apex});
  graph frame = b.build();

  // ψ lives on the frame minus the apex edges (apex vertex kept, isolated).
  std::vector<std::pair<int, int>> psi_edges;
  for (const auto& [e, c] : planned) psi_edges.emplace_back(e.u, e.v);
  graph psi_host = build_graph(frame.vertex_count(), psi_edges, frame.roles());
  std::vector<color> psi_colors(psi_host.edge_count());
  for (int i = 0; i < psi_host.edge_count(); ++i) psi_colors[i] = planned.at(psi_host.edges()[i]);
  edge_coloring psi(psi_host, std::move(psi_colors));

  if (!bel) return {frame, psi};

  // Certificate path: its embedded colored template must be the doubled
  // frame (compared by canonical colored hash, isolated vertices ignored).
  const bel_gadget_cert& cert = *bel;
  if (!same_graph(cert.h, h))
    throw std::invalid_argument("certificate targets a different graph");
  if (!cert.g.has_role("S") || static_cast<int>(cert.g.role("S").size()) != s_size)
    throw std::invalid_argument("certificate graph must carry an S role of size 2d-1");
  if (cert.psi.size() != cert.embedded.size())
    throw std::invalid_argument("certificate template colors do not match its edges");
  std::map<edge, color> tmpl_planned;
  std::vector<std::pair<int, int>> tmpl_edges;
  for (std::size_t i = 0; i < cert.embedded.size(); ++i) {
    auto [it, added] = tmpl_planned.emplace(cert.embedded[i], cert.psi[i]);
    if (!added) throw std::invalid_argument("certificate template repeats an edge");
    tmpl_edges.emplace_back(cert.embedded[i].u, cert.embedded[i].v);
  }
  graph tmpl = build_graph(cert.g.vertex_count(), tmpl_edges);
  std::vector<color> tmpl_colors(tmpl.edge_count());
  for (int i = 0; i < tmpl.edge_count(); ++i) tmpl_colors[i] = tmpl_planned.at(tmpl.edges()[i]);
  auto shape_hash = [](const graph& host, const std::vector<color>& by_index) {
    induced_result stripped = strip_isolated(host);
    std::vector<std::uint8_t> labels;
    labels.reserve(stripped.g.edge_count());
    for (const edge& e : stripped.g.edges()) {
      int idx = host.edge_index(stripped.vertex_map[e.u], stripped.vertex_map[e.v]);
      labels.push_back(by_index[idx] == color::red ? 1 : 2);
    }
    return canonical_hash_colored(stripped.g, labels);
  };
  if (shape_hash(psi_host, psi.colors()) != shape_hash(tmpl, tmpl_colors))
    throw std::invalid_argument("certificate template is not the doubled colored frame");

  graph wrapped = with_new_vertex_joined(cert.g, cert.g.role("S"));
  graph wrapped_psi_host = build_graph(wrapped.vertex_count(), tmpl_edges, wrapped.roles());
  std::vector<color> wrapped_colors(wrapped_psi_host.edge_count());
  for (int i = 0; i < wrapped_psi_host.edge_count(); ++i)
    wrapped_colors[i] = tmpl_planned.at(wrapped_psi_host.edges()[i]);
  return {wrapped, edge_coloring(wrapped_psi_host, std::move(wrapped_colors))};
}

}  // namespace rforge
