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
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rforge/embedding.hpp"
#include "rforge/graph.hpp"

namespace rforge {

enum class color : std::uint8_t { red = 0, blue = 1 };

inline color other(color c) { return c == color::red ? color::blue : color::red; }
inline char color_char(color c) { return c == color::red ? 'R' : 'B'; }

inline color color_from_char(char c) {
  if (c == 'R' || c == 'r') return color::red;
  if (c == 'B' || c == 'b') return color::blue;
  throw std::invalid_argument(std::string("unknown color character '") + c + "'");
}

/// Total red/blue assignment on the edges of a fixed host graph. Value
/// semantics: the host travels with the coloring, extensions return new
/// colorings.
class edge_coloring {
 public:
  explicit edge_coloring(graph host, color fill = color::red)
      : host_(std::move(host)), colors_(host_.edge_count(), fill) {}

  edge_coloring(graph host, std::vector<color> colors)
      : host_(std::move(host)), colors_(std::move(colors)) {
    if (colors_.size() != static_cast<std::size_t>(host_.edge_count()))
      throw std::invalid_argument("coloring size does not match host edge count");
  }

  const graph& host() const { return host_; }
  int edge_count() const { return host_.edge_count(); }
  const std::vector<color>& colors() const { return colors_; }

  color at_index(int i) const { return colors_.at(i); }

  color at(int u, int v) const {
    int i = host_.edge_index(u, v);
    if (i < 0) {
      std::ostringstream msg;
      msg << "no edge (" << u << "," << v << ") in host";
      throw std::invalid_argument(msg.str());
    }
    return colors_[i];
  }

  void set_index(int i, color c) { colors_.at(i) = c; }

  void set(int u, int v, color c) {
    int i = host_.edge_index(u, v);
    if (i < 0) {
      std::ostringstream msg;
      msg << "no edge (" << u << "," << v << ") in host";
      throw std::invalid_argument(msg.str());
    }
    colors_[i] = c;
  }

  int count(color c) const {
    int k = 0;
    for (color x : colors_)
      if (x == c) ++k;
    return k;
  }

  friend bool operator==(const edge_coloring& a, const edge_coloring& b) {
    return same_graph(a.host_, b.host_) && a.colors_ == b.colors_;
  }

 private:
  graph host_;
  std::vector<color> colors_;
};

/// Red ↔ Blue pointwise; an involution.
inline edge_coloring swap_colors(const edge_coloring& c) {
  std::vector<color> flipped(c.colors().size());
  for (std::size_t i = 0; i < flipped.size(); ++i) flipped[i] = other(c.colors()[i]);
  return edge_coloring(c.host(), std::move(flipped));
}

/// Spanning subgraph keeping only the edges of one color (all vertices and
/// roles retained).
inline graph subgraph_of_color(const edge_coloring& c, color which) {
  std::vector<std::pair<int, int>> keep;
  for (int i = 0; i < c.edge_count(); ++i)
    if (c.at_index(i) == which) {
      const edge& e = c.host().edges()[i];
      keep.emplace_back(e.u, e.v);
    }
  return build_graph(c.host().vertex_count(), keep, c.host().roles());
}

struct mono_copy {
  color col;
  embedding emb;
};

/// First monochromatic copy of h under c, red class searched first.
inline std::optional<mono_copy> find_mono_copy(const edge_coloring& c, const graph& h) {
  for (color col : {color::red, color::blue}) {
    graph cls = subgraph_of_color(c, col);
    if (auto emb = find_embedding(h, cls)) return mono_copy{col, *emb};
  }
  return std::nullopt;
}

inline bool is_mono_free(const edge_coloring& c, const graph& h) {
  return !find_mono_copy(c, h).has_value();
}

/// The color sequence an observer vertex sees along an ordered target set.
/// Two patterns are equal when they report the same colors on the same
/// targets, regardless of who observes.
struct color_pattern_t {
  int observer = -1;
  std::vector<int> targets;
  std::vector<color> colors;

  std::string str() const {
    std::string s;
    s.reserve(colors.size());
    for (color c : colors) s.push_back(color_char(c));
    return s;
  }

  friend bool operator==(const color_pattern_t& a, const color_pattern_t& b) {
    return a.targets == b.targets && a.colors == b.colors;
  }
};

inline color_pattern_t color_pattern(const edge_coloring& c, int v, const std::vector<int>& s) {
  color_pattern_t p;
  p.observer = v;
  p.targets = s;
  p.colors.reserve(s.size());
  for (int w : s) {
    int i = c.host().edge_index(v, w);
    if (i < 0) {
      std::ostringstream msg;
      msg << "color pattern undefined: vertex " << v << " is not adjacent to " << w;
      throw std::invalid_argument(msg.str());
    }
    p.colors.push_back(c.at_index(i));
  }
  return p;
}

namespace detail {

/// The host of a base coloring for the extension procedures: f with every
/// edge at v removed but the vertex slot kept, so labels line up with f.
inline graph vertex_cleared(const graph& f, int v) {
  std::vector<std::pair<int, int>> keep;
  for (const edge& e : f.edges())
    if (e.u != v && e.v != v) keep.emplace_back(e.u, e.v);
  return build_graph(f.vertex_count(), keep, f.roles());
}

inline void check_extension_base(const graph& f, int v, const edge_coloring& base) {
  if (v < 0 || v >= f.vertex_count()) throw std::invalid_argument("extension vertex out of range");
  if (!same_graph(base.host(), vertex_cleared(f, v)))
    throw std::invalid_argument("base coloring host must be f with the edges at v removed");
}

/// Lexicographically smallest all-red clique of size d inside allowed, or
/// empty. Candidates are tried in ascending vertex order.
inline bool lex_red_clique(const graph& red, const std::vector<int>& allowed, int d,
                           std::size_t from, std::vector<int>& pick) {
  if (static_cast<int>(pick.size()) == d) return true;
  for (std::size_t i = from; i < allowed.size(); ++i) {
    int w = allowed[i];
    bool ok = true;
    for (int u : pick)
      if (!red.has_edge(u, w)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    pick.push_back(w);
    if (lex_red_clique(red, allowed, d, i + 1, pick)) return true;
    pick.pop_back();
  }
  return false;
}

}  // namespace detail

/// Extends a coloring of f−v to f by splitting N(v) into a red part and a
/// blue part, each of size at most delta−1 (red part first, ascending).
/// Keeps v's red and blue degrees below delta, so no monochromatic copy of
/// an H with minimum degree delta can use v.
inline edge_coloring extend_split(const graph& f, int v, const edge_coloring& base, int delta) {
  detail::check_extension_base(f, v, base);
  if (delta < 1) throw std::invalid_argument("delta must be positive");
  int deg = f.degree(v);
  if (deg > 2 * delta - 2) {
    std::ostringstream msg;
    msg << "degree " << deg << " of vertex " << v << " exceeds 2*delta-2 = " << (2 * delta - 2);
    throw std::invalid_argument(msg.str());
  }
  edge_coloring out(f);
  for (int i = 0; i < f.edge_count(); ++i) {
    const edge& e = f.edges()[i];
    if (e.u == v || e.v == v) continue;
    out.set_index(i, base.at(e.u, e.v));
  }
  std::vector<int> nbrs = f.neighbors(v).to_vector();
  int red_quota = delta - 1;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    out.set(v, nbrs[i], static_cast<int>(i) < red_quota ? color::red : color::blue);
  return out;
}

/// Extends a coloring of f−v to f around a greedy maximal vertex-disjoint
/// packing of red d-cliques in N(v): edges from v into the packing turn
/// blue, all other edges at v turn red. The packing being maximal leaves no
/// red K_d in v's red neighborhood, and the packing being vertex-disjoint
/// with deg(v) < d² leaves no blue K_d in v's blue neighborhood.
inline edge_coloring extend_packing(const graph& f, int v, const edge_coloring& base, int d) {
  detail::check_extension_base(f, v, base);
  if (d < 1) throw std::invalid_argument("clique order must be positive");
  int deg = f.degree(v);
  if (deg >= d * d) {
    std::ostringstream msg;
    msg << "degree " << deg << " of vertex " << v << " is not below d*d = " << (d * d);
    throw std::invalid_argument(msg.str());
  }
  graph red = subgraph_of_color(base, color::red);
  std::vector<int> remaining = f.neighbors(v).to_vector();
  std::vector<char> in_packing(f.vertex_count(), 0);
  while (true) {
    std::vector<int> pick;
    if (!detail::lex_red_clique(red, remaining, d, 0, pick)) break;
    for (int w : pick) in_packing[w] = 1;
    std::vector<int> rest;
    for (int w : remaining)
      if (!in_packing[w]) rest.push_back(w);
    remaining = std::move(rest);
  }
  edge_coloring out(f);
  for (int i = 0; i < f.edge_count(); ++i) {
    const edge& e = f.edges()[i];
    if (e.u == v || e.v == v) continue;
    out.set_index(i, base.at(e.u, e.v));
  }
  for (int w : f.neighbors(v).to_vector())
    out.set(v, w, in_packing[w] ? color::blue : color::red);
  return out;
}

/// JSON coloring form: {"edges": [[u,v,"R"|"B"], ...]} in host edge order.
inline nlohmann::ordered_json coloring_to_json(const edge_coloring& c) {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (int i = 0; i < c.edge_count(); ++i) {
    const edge& e = c.host().edges()[i];
    arr.push_back({e.u, e.v, std::string(1, color_char(c.at_index(i)))});
  }
  j["edges"] = std::move(arr);
  return j;
}

/// Reads a coloring for a known host; the entries must cover the host's
/// edge set exactly.
inline edge_coloring coloring_from_json(const graph& host, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("coloring json: need object with an \"edges\" array");
  if (j["edges"].size() != static_cast<std::size_t>(host.edge_count()))
    throw std::invalid_argument("coloring json: entry count does not match host edge count");
  std::vector<color> colors(host.edge_count());
  std::vector<char> seen(host.edge_count(), 0);
  for (const auto& entry : j["edges"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_string())
      throw std::invalid_argument("coloring json: each entry must be [u, v, \"R\"|\"B\"]");
    int u = entry[0].get<int>(), v = entry[1].get<int>();
    int i = host.edge_index(u, v);
    if (i < 0) {
      std::ostringstream msg;
      msg << "coloring json: (" << u << "," << v << ") is not an edge of the host";
      throw std::invalid_argument(msg.str());
    }
    if (seen[i]) throw std::invalid_argument("coloring json: duplicate edge entry");
    seen[i] = 1;
    std::string s = entry[2].get<std::string>();
    if (s.size() != 1) throw std::invalid_argument("coloring json: color must be \"R\" or \"B\"");
    colors[i] = color_from_char(s[0]);
  }
  return edge_coloring(host, std::move(colors));
}

/// Graphviz export with red/blue edge colors and role boxes.
inline std::string coloring_to_dot(const edge_coloring& c, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
  const graph& g = c.host();
  int cluster = 0;
  std::vector<char> in_role(g.vertex_count(), 0);
  for (const auto& [role, verts] : g.roles()) {
    out << "  subgraph cluster_" << cluster++ << " {\n";
    out << "    label=\"" << role << "\";\n    style=box;\n";
    out << "   ";
    for (int v : verts) {
      out << " " << v << ";";
      if (v >= 0 && v < g.vertex_count()) in_role[v] = 1;
    }
    out << "\n  }\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_role[v]) out << "  " << v << ";\n";
  for (int i = 0; i < c.edge_count(); ++i) {
    const edge& e = g.edges()[i];
    out << "  " << e.u << " -- " << e.v << " [color="
        << (c.at_index(i) == color::red ? "red" : "blue") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rforge
