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

// ramsey-forge: command-line surface for the arrowing engine and the gadget
// constructions. File-based I/O only; the JSON report goes to stdout, human
// diagnostics to stderr.
//
// Exit codes are a stable contract:
//   0  property holds / F arrows H / value found
//   1  property fails / F does not arrow H (witness written) / not found
//   2  usage error, malformed input, violated precondition
//   3  search budget exhausted

#include <CLI11.hpp>

#include <rforge/rforge.hpp>

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Shared configuration

struct command_config {
  std::string output;           // "" = per-command default
  std::string format = "json";  // graph6 | json | dot
  std::uint64_t max_nodes = 0;  // 0 = engine default
  std::uint64_t timeout_ms = 0; // 0 = no deadline
  int threads = 1;
  bool deterministic = false;
  std::uint64_t seed = 0;  // reserved for generator commands
};

int default_threads() {
  const char* env = std::getenv("RAMSEY_FORGE_THREADS");
  if (env == nullptr) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

rforge::arrow_budget budget_of(const command_config& cfg) {
  rforge::arrow_budget b;
  if (cfg.max_nodes > 0) b.max_nodes = cfg.max_nodes;
  b.timeout_ms = cfg.timeout_ms;
  b.threads = cfg.deterministic ? 1 : std::max(1, cfg.threads);
  b.deterministic = cfg.deterministic;
  return b;
}

void add_common_flags(CLI::App* cmd, command_config& cfg) {
  cmd->add_option("--output", cfg.output, "output file path");
  cmd->add_option("--format", cfg.format, "graph file format")
      ->check(CLI::IsMember({"graph6", "json", "dot"}));
  cmd->add_option("--max-nodes", cfg.max_nodes, "search tree node budget (0 = default)");
  cmd->add_option("--timeout-ms", cfg.timeout_ms, "wall-clock budget in milliseconds (0 = none)");
  cmd->add_option("--threads", cfg.threads, "worker threads (env RAMSEY_FORGE_THREADS)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--deterministic", cfg.deterministic,
                "sequential search, byte-identical reports (omits timings)");
  cmd->add_option("--seed", cfg.seed, "random seed (reserved for generator commands)");
}

// ---------------------------------------------------------------------------
// Input parsing

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Built-in graph names: k<N>, c<N>, p<N> (complete/cycle/path on N vertices),
// h<T>_<D> (K_T plus an apex of degree D), petersen.
std::optional<rforge::graph> try_named_graph(const std::string& spec) {
  std::string s;
  for (char c : spec) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "petersen") return rforge::petersen_graph();
  auto all_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (s.size() >= 2 && (s[0] == 'k' || s[0] == 'c' || s[0] == 'p') && all_digits(s.substr(1))) {
    int n = std::stoi(s.substr(1));
    if (s[0] == 'k') return rforge::complete_graph(n);
    if (s[0] == 'c') return rforge::cycle_graph(n);
    return rforge::path_graph(n);
  }
  if (s.size() >= 4 && s[0] == 'h') {
    auto sep = s.find('_');
    if (sep != std::string::npos && all_digits(s.substr(1, sep - 1)) &&
        all_digits(s.substr(sep + 1))) {
      return rforge::make_H_t_d(std::stoi(s.substr(1, sep - 1)), std::stoi(s.substr(sep + 1)));
    }
  }
  return std::nullopt;
}

rforge::graph load_graph(const std::string& spec) {
  if (auto named = try_named_graph(spec)) return *named;
  std::string text = read_file(spec);
  auto parse_graph6 = [&]() {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) return rforge::from_graph6(line);
    }
    throw std::invalid_argument("'" + spec + "' contains no graph6 line");
  };
  if (ends_with(spec, ".json")) return rforge::graph_from_json_string(text);
  if (ends_with(spec, ".g6")) return parse_graph6();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return rforge::graph_from_json_string(text);
  return parse_graph6();
}

rforge::edge parse_edge_arg(const std::string& s) {
  std::size_t sep = s.find(',');
  if (sep == std::string::npos) sep = s.find('-');
  if (sep == std::string::npos || sep == 0 || sep + 1 >= s.size())
    throw std::invalid_argument("edge '" + s + "' must look like 'u,v'");
  int u = std::stoi(s.substr(0, sep));
  int v = std::stoi(s.substr(sep + 1));
  return rforge::edge(u, v);
}

rforge::edge_coloring load_coloring(const rforge::graph& host, const std::string& path) {
  auto j = nlohmann::json::parse(read_file(path));
  return rforge::coloring_from_json(host, j);
}

// ---------------------------------------------------------------------------
// Output rendering

std::string format_extension(const std::string& format) {
  if (format == "graph6") return ".g6";
  if (format == "dot") return ".dot";
  return ".json";
}

std::string strip_known_extension(const std::string& path) {
  for (const char* ext : {".json", ".g6", ".dot"})
    if (ends_with(path, ext)) return path.substr(0, path.size() - std::string(ext).size());
  return path;
}

std::string render_graph(const rforge::graph& g, const std::string& format) {
  if (format == "graph6") return rforge::to_graph6(g) + "\n";
  if (format == "dot") return rforge::graph_to_dot(g);
  return rforge::graph_to_json_string(g);
}

void print_report(const ordered_json& rep) { std::cout << rep.dump(2) << "\n"; }

// Writes a construction's graph (and coloring companion files, when the
// construction carries one) and fills in the report's file list.
void emit_construction(const rforge::colored_construction& c, const command_config& cfg,
                       const std::string& default_stem, ordered_json& rep) {
  std::string path =
      cfg.output.empty() ? default_stem + format_extension(cfg.format) : cfg.output;
  if (cfg.format == "dot" && c.psi) {
    write_file(path, rforge::coloring_to_dot(*c.psi));
  } else {
    write_file(path, render_graph(c.g, cfg.format));
  }
  rep["vertices"] = c.g.vertex_count();
  rep["edges"] = c.g.edge_count();
  rep["output"] = path;
  if (c.psi) {
    std::string stem = strip_known_extension(path);
    std::string coloring_path = stem + ".coloring.json";
    write_file(coloring_path, rforge::coloring_to_json(*c.psi).dump(2) + "\n");
    rep["coloring"] = coloring_path;
    if (!rforge::same_graph(c.psi->host(), c.g)) {
      // The coloring lives on a subgraph (e.g. a frame whose apex edges stay
      // uncolored); emit that host so the coloring file can be re-read.
      std::string host_path = stem + ".psi_host.json";
      write_file(host_path, rforge::graph_to_json_string(c.psi->host()));
      rep["coloring_host"] = host_path;
    }
  }
}

// ---------------------------------------------------------------------------
// construct

struct construct_args {
  std::string name;
  int t = 0;
  int d = 0;
  int v = 0;
  std::string h, g, r0, g0, g1, coloring;
  std::vector<std::string> components;
  std::string sender, e, f;
  std::string ga, ea, fa, gb, eb, fb;
};

int run_construct(const construct_args& a, const command_config& cfg) {
  ordered_json rep;
  rep["command"] = "construct";
  rep["construction"] = a.name;
  rforge::arrow_budget budget = budget_of(cfg);

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(a.name + " requires " + what);
  };

  if (a.name == "h_t_d") {
    require(a.t > 0, "--t");
    rforge::colored_construction c{rforge::make_H_t_d(a.t, a.d), std::nullopt};
    emit_construction(c, cfg, a.name, rep);
  } else if (a.name == "clique_transversal") {
    require(a.t > 0, "--t");
    rforge::colored_construction c = rforge::make_clique_transversal_gadget(a.t, a.d);
    emit_construction(c, cfg, a.name, rep);
  } else if (a.name == "join_gadget") {
    require(!a.r0.empty(), "--r0");
    require(a.t > 0, "--t");
    std::vector<rforge::graph> parts;
    for (const std::string& spec : a.components) parts.push_back(load_graph(spec));
    rforge::colored_construction c = rforge::make_join_gadget(load_graph(a.r0), parts, a.t);
    emit_construction(c, cfg, a.name, rep);
  } else if (a.name == "apex_gadget") {
    require(!a.h.empty(), "--h");
    rforge::colored_construction c = rforge::make_apex_gadget(load_graph(a.h), a.v);
    emit_construction(c, cfg, a.name, rep);
  } else if (a.name == "simplicity_witness") {
    require(!a.h.empty(), "--h");
    rforge::colored_construction c = rforge::make_simplicity_witness(load_graph(a.h), a.v);
    emit_construction(c, cfg, a.name, rep);
  } else if (a.name == "chain_senders") {
    require(!a.ga.empty() && !a.ea.empty() && !a.fa.empty(), "--ga/--ea/--fa");
    require(!a.gb.empty() && !a.eb.empty() && !a.fb.empty(), "--gb/--eb/--fb");
    require(!a.h.empty(), "--h");
    rforge::graph h = load_graph(a.h);
    rforge::signal_sender_cert first{load_graph(a.ga), parse_edge_arg(a.ea),
                                     parse_edge_arg(a.fa), h};
    rforge::signal_sender_cert second{load_graph(a.gb), parse_edge_arg(a.eb),
                                      parse_edge_arg(a.fb), h};
    if (!rforge::verify_signal_sender(first, budget) ||
        !rforge::verify_signal_sender(second, budget)) {
      std::cerr << "an input is not a signal sender for the target\n";
      rep["verified"] = false;
      print_report(rep);
      return 1;
    }
    rforge::signal_sender_cert chained = rforge::chain_senders(first, second);
    bool ok = rforge::verify_signal_sender(chained, budget);
    rforge::colored_construction c{chained.g, std::nullopt};
    emit_construction(c, cfg, a.name, rep);
    rep["e"] = {chained.e.u, chained.e.v};
    rep["f"] = {chained.f.u, chained.f.v};
    rep["edge_distance"] = rforge::edge_distance(chained.g, chained.e, chained.f);
    rep["verified"] = ok;
    if (!ok) {
      print_report(rep);
      return 1;
    }
  } else if (a.name == "weak_bel_frame") {
    require(!a.g0.empty() && !a.g1.empty(), "--g0/--g1");
    require(!a.sender.empty() && !a.e.empty() && !a.f.empty(), "--sender/--e/--f");
    require(!a.h.empty(), "--h");
    rforge::signal_sender_cert sender{load_graph(a.sender), parse_edge_arg(a.e),
                                      parse_edge_arg(a.f), load_graph(a.h)};
    if (!rforge::verify_signal_sender(sender, budget)) {
      std::cerr << "--sender is not a signal sender for the target\n";
      rep["verified"] = false;
      print_report(rep);
      return 1;
    }
    rforge::colored_construction c =
        rforge::make_weak_bel_frame(load_graph(a.g0), load_graph(a.g1), sender, budget);
    emit_construction(c, cfg, a.name, rep);
  } else if (a.name == "weak_to_strong") {
    require(!a.g.empty(), "--g");
    require(!a.coloring.empty(), "--coloring");
    require(!a.h.empty(), "--h");
    rforge::graph g = load_graph(a.g);
    rforge::strong_frame_pair pair =
        rforge::weak_to_strong_frame(g, load_coloring(g, a.coloring), load_graph(a.h));
    std::string stem = cfg.output.empty() ? std::string(a.name)
                                          : strip_known_extension(cfg.output);
    std::string ext = format_extension(cfg.format);
    ordered_json outputs = ordered_json::array();
    const std::pair<const char*, const rforge::graph*> parts[] = {{"g0", &pair.g0},
                                                                  {"g1", &pair.g1}};
    for (const auto& [tag, part] : parts) {
      std::string path = stem + "." + tag + ext;
      write_file(path, render_graph(*part, cfg.format));
      ordered_json entry;
      entry["name"] = tag;
      entry["vertices"] = part->vertex_count();
      entry["edges"] = part->edge_count();
      entry["output"] = path;
      outputs.push_back(std::move(entry));
    }
    rep["outputs"] = std::move(outputs);
  } else {
    throw std::invalid_argument("unknown construction '" + a.name + "'");
  }

  print_report(rep);
  return 0;
}

// ---------------------------------------------------------------------------
// arrow

int run_arrow(const std::string& f_spec, const std::string& h_spec, const command_config& cfg) {
  rforge::graph f = load_graph(f_spec);
  rforge::graph h = load_graph(h_spec);
  rforge::arrowing_result r = rforge::arrows(f, h, budget_of(cfg));
  ordered_json rep = rforge::arrowing_result_to_json(r, !cfg.deterministic);
  rep["command"] = "arrow";
  if (r.verdict == rforge::arrow_verdict::not_arrows) {
    // Re-check the witness before publishing it.
    if (!rforge::is_mono_free(*r.witness, h))
      throw std::logic_error("internal error: witness coloring is not mono-free");
    std::string path = cfg.output.empty() ? "witness.json" : cfg.output;
    write_file(path, rforge::coloring_to_json(*r.witness).dump(2) + "\n");
    rep["witness_file"] = path;
    print_report(rep);
    return 1;
  }
  print_report(rep);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct verify_args {
  std::string g, f, h, coloring, tmpl, e, f_edge;
  int d = 0;
  double eps = 1.0;
};

int report_property(const std::string& property, bool holds, ordered_json extra = {}) {
  ordered_json rep;
  rep["command"] = "verify";
  rep["property"] = property;
  rep["holds"] = holds;
  for (auto& [k, v] : extra.items()) rep[k] = v;
  print_report(rep);
  return holds ? 0 : 1;
}

int run_verify_mono_free(const verify_args& a, const command_config&) {
  rforge::graph g = load_graph(a.g);
  rforge::graph h = load_graph(a.h);
  rforge::edge_coloring psi = load_coloring(g, a.coloring);
  auto hit = rforge::find_mono_copy(psi, h);
  ordered_json extra;
  if (hit) {
    ordered_json violation;
    violation["color"] = std::string(1, rforge::color_char(hit->col));
    violation["vertices"] = hit->emb.map;
    extra["violation"] = std::move(violation);
  }
  return report_property("mono_free", !hit.has_value(), std::move(extra));
}

int run_verify_sender(const verify_args& a, const command_config& cfg) {
  bool holds = rforge::is_signal_sender(load_graph(a.g), parse_edge_arg(a.e),
                                        parse_edge_arg(a.f_edge), load_graph(a.h),
                                        budget_of(cfg));
  return report_property("signal_sender", holds);
}

int run_verify_bel(const verify_args& a, const command_config& cfg) {
  rforge::bel_gadget_cert cert;
  cert.g = load_graph(a.g);
  cert.h = load_graph(a.h);
  auto j = nlohmann::json::parse(read_file(a.tmpl));
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("template file must hold {\"edges\": [[u,v,\"R|B\"], ...]}");
  for (const auto& entry : j["edges"]) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("template entries must be [u, v, color]");
    cert.embedded.push_back(rforge::edge(entry[0].get<int>(), entry[1].get<int>()));
    cert.psi.push_back(rforge::color_from_char(entry[2].get<std::string>().at(0)));
  }
  bool holds = rforge::verify_bel_property(cert, budget_of(cfg));
  return report_property("bel_gadget", holds);
}

int run_verify_apex(const verify_args& a, const command_config& cfg) {
  rforge::graph g = load_graph(a.g);
  if (!g.has_role("S"))
    throw std::invalid_argument("graph file must carry a role \"S\" naming the independent set");
  bool holds = rforge::verify_apex_property(g, g.role("S"), a.d, load_graph(a.h), budget_of(cfg));
  return report_property("apex_gadget", holds);
}

int run_verify_minimal(const verify_args& a, const command_config& cfg) {
  bool holds = rforge::is_ramsey_minimal(load_graph(a.f), load_graph(a.h), budget_of(cfg));
  return report_property("ramsey_minimal", holds);
}

int run_verify_epsilon(const verify_args& a, const command_config& cfg) {
  bool holds = rforge::epsilon_arrows(load_graph(a.f), load_graph(a.h), a.eps, budget_of(cfg));
  ordered_json extra;
  extra["eps"] = a.eps;
  return report_property("epsilon_arrows", holds, std::move(extra));
}

// ---------------------------------------------------------------------------
// search

int run_search_ramsey_number(const std::string& h_spec, int n_max, const command_config& cfg) {
  std::optional<int> value =
      rforge::ramsey_number_desk(load_graph(h_spec), n_max, budget_of(cfg));
  ordered_json rep;
  rep["command"] = "search";
  rep["kind"] = "ramsey_number";
  rep["n_max"] = n_max;
  if (value) {
    rep["value"] = *value;
    rep["status"] = "exact within bound";
  } else {
    rep["value"] = nullptr;
    rep["status"] = "not found <= " + std::to_string(n_max);
  }
  print_report(rep);
  return value ? 0 : 1;
}

int run_search_s_upper(const std::string& h_spec, const std::vector<std::string>& candidates,
                       const command_config& cfg) {
  std::vector<rforge::graph> universe;
  for (const std::string& spec : candidates) universe.push_back(load_graph(spec));
  rforge::min_degree_search_result found =
      rforge::s_min_degree_witness_search(load_graph(h_spec), universe, budget_of(cfg));
  ordered_json rep;
  rep["command"] = "search";
  rep["kind"] = "s_upper";
  rep["value"] = found.best;
  rep["status"] = "upper bound only";
  rep["witness_vertices"] = found.witness.vertex_count();
  rep["witness_edges"] = found.witness.edge_count();
  if (!cfg.output.empty()) {
    write_file(cfg.output, render_graph(found.witness, cfg.format));
    rep["witness_file"] = cfg.output;
  }
  print_report(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramsey-forge: Ramsey arrowing engine and gadget constructions"};
  app.require_subcommand(1);
  // --h names a target graph throughout, so help stays long-form only.
  app.set_help_flag("--help", "print help and exit");

  command_config cfg;
  cfg.threads = default_threads();

  // Subcommands take --h as an ordinary option, so they drop -h too.
  auto long_help = [](CLI::App* sub) {
    sub->set_help_flag("--help", "print help and exit");
    return sub;
  };

  // construct
  construct_args cons;
  CLI::App* construct =
      long_help(app.add_subcommand("construct", "build a named gadget and write it out"));
  construct
      ->add_option("name", cons.name,
                   "one of: h_t_d, clique_transversal, join_gadget, apex_gadget, "
                   "simplicity_witness, chain_senders, weak_bel_frame, weak_to_strong")
      ->required();
  construct->add_option("--t", cons.t, "clique size t");
  construct->add_option("--d", cons.d, "apex degree / clique count d");
  construct->add_option("--v", cons.v, "distinguished vertex of the target graph");
  construct->add_option("--h", cons.h, "target graph H (file or named graph like c5)");
  construct->add_option("--g", cons.g, "input graph");
  construct->add_option("--r0", cons.r0, "join gadget: the R_0 part");
  construct->add_option("--components", cons.components, "join gadget: the F_i parts");
  construct->add_option("--g0", cons.g0, "frame base graph (red intent)");
  construct->add_option("--g1", cons.g1, "frame base graph (blue intent)");
  construct->add_option("--coloring", cons.coloring, "edge coloring JSON file");
  construct->add_option("--sender", cons.sender, "signal sender graph");
  construct->add_option("--e", cons.e, "sender edge e as 'u,v'");
  construct->add_option("--f", cons.f, "sender edge f as 'u,v'");
  construct->add_option("--ga", cons.ga, "chain: first sender graph");
  construct->add_option("--ea", cons.ea, "chain: first sender's e as 'u,v'");
  construct->add_option("--fa", cons.fa, "chain: first sender's f as 'u,v'");
  construct->add_option("--gb", cons.gb, "chain: second sender graph");
  construct->add_option("--eb", cons.eb, "chain: second sender's e as 'u,v'");
  construct->add_option("--fb", cons.fb, "chain: second sender's f as 'u,v'");
  add_common_flags(construct, cfg);

  // arrow
  std::string arrow_f, arrow_h;
  CLI::App* arrow = long_help(app.add_subcommand("arrow", "decide whether F arrows H"));
  arrow->add_option("--f", arrow_f, "host graph F")->required();
  arrow->add_option("--h", arrow_h, "target graph H")->required();
  add_common_flags(arrow, cfg);

  // verify
  verify_args ver;
  CLI::App* verify = long_help(app.add_subcommand("verify", "check a certified property"));
  verify->require_subcommand(1);
  CLI::App* v_mono = long_help(verify->add_subcommand("mono-free", "coloring has no monochromatic H"));
  v_mono->add_option("--g", ver.g, "host graph")->required();
  v_mono->add_option("--coloring", ver.coloring, "edge coloring JSON file")->required();
  v_mono->add_option("--h", ver.h, "target graph H")->required();
  add_common_flags(v_mono, cfg);
  CLI::App* v_sender = long_help(verify->add_subcommand("sender", "e and f share a color in every mono-free coloring"));
  v_sender->add_option("--g", ver.g, "sender graph")->required();
  v_sender->add_option("--e", ver.e, "edge e as 'u,v'")->required();
  v_sender->add_option("--f", ver.f_edge, "edge f as 'u,v'")->required();
  v_sender->add_option("--h", ver.h, "target graph H")->required();
  add_common_flags(v_sender, cfg);
  CLI::App* v_bel = long_help(verify->add_subcommand("bel", "every mono-free coloring matches the template up to swap"));
  v_bel->add_option("--g", ver.g, "gadget graph")->required();
  v_bel->add_option("--template", ver.tmpl, "template JSON {\"edges\": [[u,v,\"R\"], ...]}")
      ->required();
  v_bel->add_option("--h", ver.h, "target graph H")->required();
  add_common_flags(v_bel, cfg);
  CLI::App* v_apex = long_help(verify->add_subcommand("apex", "H-free, yet any d-subset of S plus an apex creates H"));
  v_apex->add_option("--g", ver.g, "gadget graph carrying role S")->required();
  v_apex->add_option("--h", ver.h, "target graph H")->required();
  v_apex->add_option("--d", ver.d, "apex degree d")->required();
  add_common_flags(v_apex, cfg);
  CLI::App* v_minimal = long_help(verify->add_subcommand("minimal", "F arrows H but no proper subgraph does"));
  v_minimal->add_option("--f", ver.f, "host graph F")->required();
  v_minimal->add_option("--h", ver.h, "target graph H")->required();
  add_common_flags(v_minimal, cfg);
  CLI::App* v_eps = long_help(verify->add_subcommand("epsilon", "every induced subgraph on >= eps*n vertices arrows H"));
  v_eps->add_option("--f", ver.f, "host graph F")->required();
  v_eps->add_option("--h", ver.h, "target graph H")->required();
  v_eps->add_option("--eps", ver.eps, "fraction in (0,1]")->required();
  add_common_flags(v_eps, cfg);

  // search
  std::string search_h;
  int search_n_max = 0;
  std::vector<std::string> search_candidates;
  CLI::App* search = long_help(app.add_subcommand("search", "bounded searches"));
  search->require_subcommand(1);
  CLI::App* s_ramsey = long_help(search->add_subcommand("ramsey_number", "least n <= n-max with K_n arrows H"));
  s_ramsey->add_option("--h", search_h, "target graph H")->required();
  s_ramsey->add_option("--n-max", search_n_max, "largest complete graph to try")->required();
  add_common_flags(s_ramsey, cfg);
  CLI::App* s_upper = long_help(search->add_subcommand(
      "s_upper", "minimize min-degree over Ramsey-minimal subgraphs of the candidates"));
  s_upper->add_option("--h", search_h, "target graph H")->required();
  s_upper->add_option("--candidates", search_candidates, "candidate host graphs")->required();
  add_common_flags(s_upper, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (construct->parsed()) return run_construct(cons, cfg);
    if (arrow->parsed()) return run_arrow(arrow_f, arrow_h, cfg);
    if (verify->parsed()) {
      if (v_mono->parsed()) return run_verify_mono_free(ver, cfg);
      if (v_sender->parsed()) return run_verify_sender(ver, cfg);
      if (v_bel->parsed()) return run_verify_bel(ver, cfg);
      if (v_apex->parsed()) return run_verify_apex(ver, cfg);
      if (v_minimal->parsed()) return run_verify_minimal(ver, cfg);
      if (v_eps->parsed()) return run_verify_epsilon(ver, cfg);
    }
    if (search->parsed()) {
      if (s_ramsey->parsed()) return run_search_ramsey_number(search_h, search_n_max, cfg);
      if (s_upper->parsed()) return run_search_s_upper(search_h, search_candidates, cfg);
    }
  } catch (const rforge::budget_exhausted_error& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand selected\n";
  return 2;
}
