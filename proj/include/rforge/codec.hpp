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

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rforge/graph.hpp"

namespace rforge {

class codec_error : public std::runtime_error {
 public:
  explicit codec_error(const std::string& what) : std::runtime_error(what) {}
};

/// graph6 encoding, short form only (n <= 62: one length byte, then the
/// upper triangle column by column, six bits per byte, each byte offset
/// by 63). Roles do not survive this format.
inline std::string to_graph6(const graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw codec_error("graph6 short form requires at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int bits = 0, acc = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

inline graph from_graph6(const std::string& s) {
  if (s.empty()) throw codec_error("graph6: empty input");
  unsigned char head = static_cast<unsigned char>(s[0]);
  if (head == 126) throw codec_error("graph6: long form (leading '~') not supported");
  if (head < 63 || head > 125)
    throw codec_error("graph6: invalid length byte at offset 0");
  int n = head - 63;
  long need_bits = static_cast<long>(n) * (n - 1) / 2;
  std::size_t need_bytes = static_cast<std::size_t>((need_bits + 5) / 6);
  if (s.size() != 1 + need_bytes) {
    std::ostringstream msg;
    msg << "graph6: expected " << (1 + need_bytes) << " bytes for n=" << n << ", got "
        << s.size();
    throw codec_error(msg.str());
  }
  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      std::size_t byte_at = 1 + static_cast<std::size_t>(bit / 6);
      unsigned char c = static_cast<unsigned char>(s[byte_at]);
      if (c < 63 || c > 126) {
        std::ostringstream msg;
        msg << "graph6: invalid byte at offset " << byte_at;
        throw codec_error(msg.str());
      }
      int val = c - 63;
      if ((val >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits past the triangle must be zero.
  for (long b = need_bits; b < static_cast<long>(need_bytes) * 6; ++b) {
    unsigned char c = static_cast<unsigned char>(s[1 + b / 6]);
    if (((c - 63) >> (5 - b % 6)) & 1)
      throw codec_error("graph6: nonzero padding bits");
  }
  return build_graph(n, edges);
}

/// JSON graph form: {"n": ..., "edges": [[u,v], ...], "roles": {...}} with
/// edges sorted and roles in key order, so re-encoding is byte-stable.
inline nlohmann::ordered_json graph_to_json(const graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  auto roles = nlohmann::ordered_json::object();
  for (const auto& [name, verts] : g.roles()) roles[name] = verts;
  j["roles"] = std::move(roles);
  return j;
}

inline graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw codec_error("graph json: need object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 0)
    throw codec_error("graph json: \"n\" must be a nonnegative integer");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw codec_error("graph json: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  role_map roles;
  if (j.contains("roles")) {
    if (!j["roles"].is_object()) throw codec_error("graph json: \"roles\" must be an object");
    for (const auto& [name, verts] : j["roles"].items()) {
      if (!verts.is_array()) throw codec_error("graph json: role values must be arrays");
      std::vector<int> vs;
      for (const auto& v : verts) {
        if (!v.is_number_integer()) throw codec_error("graph json: role vertices must be integers");
        int vi = v.get<int>();
        if (vi < 0 || vi >= n) throw codec_error("graph json: role vertex out of range");
        vs.push_back(vi);
      }
      roles[name] = std::move(vs);
    }
  }
  try {
    return build_graph(n, edges, roles);
  } catch (const std::invalid_argument& ex) {
    throw codec_error(std::string("graph json: ") + ex.what());
  }
}

inline std::string graph_to_json_string(const graph& g) { return graph_to_json(g).dump(2) + "\n"; }

inline graph graph_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw codec_error(std::string("graph json: ") + ex.what());
  }
  return graph_from_json(j);
}

/// Graphviz export. Roles become labeled box clusters drawn around their
/// vertices; with no roles the output is a flat edge list.
inline std::string graph_to_dot(const graph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
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
  for (const edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rforge
