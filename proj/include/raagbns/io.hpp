#pragma once

// File formats and JSON reports. Graphs: {"vertices": [...], "edges": [[u, v], ...]}
// or an edge list ("u v" per line, isolated vertices on a "vertices:" line).
// Arrangements: {"ambient_dim": n, "subspaces": [[row, ...], ...]} with
// entries as "p/q" strings or integers. Rationals are written as strings.

#include <algorithm>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "raagbns/bns.hpp"
#include "raagbns/error.hpp"
#include "raagbns/graph.hpp"
#include "raagbns/homology.hpp"
#include "raagbns/linalg.hpp"
#include "raagbns/presentations.hpp"
#include "raagbns/raag_words.hpp"

namespace raagbns {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "raagbns";
inline constexpr const char* kToolVersion = "1.0.0";

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline SimpleGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw InputError("graph JSON needs a \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw InputError("vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw InputError("each edge must be a pair of vertex labels");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return SimpleGraph(std::move(vertices), edges);
}

inline SimpleGraph graph_from_edge_list(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  auto declare = [&](const std::string& v) {
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
  };
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "vertices:") {
      std::string v;
      while (tokens >> v) declare(v);
      continue;
    }
    std::string second, extra;
    if (!(tokens >> second) || (tokens >> extra)) throw InputError("edge lines must read \"u v\": '" + line + "'");
    declare(first);
    declare(second);
    edges.emplace_back(first, second);
  }
  return SimpleGraph(std::move(vertices), edges);
}

/// JSON when the text starts with '{', otherwise an edge list.
inline SimpleGraph parse_graph(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return graph_from_json(parse_json_text(text));
  return graph_from_edge_list(text);
}

inline SimpleGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

inline Json to_json(const SimpleGraph& g) {
  Json j;
  j["vertices"] = g.labels();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  j["edges"] = std::move(edges);
  return j;
}

inline std::string to_edge_list(const SimpleGraph& g) {
  std::string out = "vertices:";
  for (const auto& l : g.labels()) out += " " + l;
  out += "\n";
  for (const auto& [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

inline Rational rational_from_json(const Json& x) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) return parse_rational(std::to_string(x.get<long long>()));
  throw InputError("matrix entries must be integers or \"p/q\" strings");
}

inline Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j["ambient_dim"].is_number_unsigned())
    throw InputError("arrangement JSON needs a nonnegative \"ambient_dim\"");
  if (!j.contains("subspaces") || !j["subspaces"].is_array()) throw InputError("arrangement JSON needs \"subspaces\"");
  Arrangement a;
  a.ambient_dim = j["ambient_dim"].get<std::size_t>();
  for (const auto& s : j["subspaces"]) {
    if (!s.is_array()) throw InputError("each subspace is a list of spanning rows");
    QMatrix rows(0, a.ambient_dim);
    for (const auto& r : s) {
      if (!r.is_array() || r.size() != a.ambient_dim) throw InputError("spanning row length must equal ambient_dim");
      std::vector<Rational> row;
      for (const auto& x : r) row.push_back(rational_from_json(x));
      rows.append_row(row);
    }
    a.subspaces.push_back(Subspace::span(a.ambient_dim, std::move(rows)));
  }
  return a;
}

inline Arrangement load_arrangement(const std::string& path) {
  return arrangement_from_json(parse_json_text(read_file(path)));
}

inline Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

inline Json to_json(const Subspace& s) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(to_json(s.basis().row(r)));
  return rows;
}

inline Json to_json(const Arrangement& a) {
  Json j;
  j["ambient_dim"] = a.ambient_dim;
  Json subs = Json::array();
  for (const auto& s : a.subspaces) subs.push_back(to_json(s));
  j["subspaces"] = std::move(subs);
  return j;
}

inline Json to_json(const BettiProfile& b) {
  Json j;
  j["betti"] = b.betti;
  j["euler"] = b.euler;
  return j;
}

inline Json to_json(const SimpleGraph& g, const Component& c) { return component_labels(g, c); }

inline Json to_json(const SimpleGraph& g, const SupportGraph& d) {
  Json j;
  j["owner"] = g.label(d.owner);
  Json nodes = Json::array();
  for (const auto& c : d.nodes) nodes.push_back(to_json(g, c));
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& [x, y] : d.edges) edges.push_back({x, y});
  j["edges"] = std::move(edges);
  const auto cert = forest_certificate(d);
  if (const auto* forest = std::get_if<ForestData>(&cert)) {
    j["forest"] = true;
    j["trees"] = forest->trees;
  } else {
    j["forest"] = false;
    j["loop"] = std::get<LoopWitness>(cert).cycle;
  }
  return j;
}

inline Json to_json(const SimpleGraph& g, const CharacterBasis& basis) {
  Json out = Json::array();
  for (const auto& s : basis.generators()) out.push_back(generator_name(g, s));
  return out;
}

inline Json to_json(const GeneratorSet& s) {
  Json j;
  j["members"] = s.members;
  j["side1"] = s.side1;
  j["side2"] = s.side2;
  return j;
}

/// Tokens "name" or "name^-1" for a word over named symbols.
inline Json word_tokens(const std::vector<std::string>& names, const Word& w) {
  Json out = Json::array();
  for (const auto& l : w) out.push_back(names.at(l.vertex) + (l.exponent < 0 ? "^-1" : ""));
  return out;
}

inline Json to_json(const GroupPresentation& p) {
  Json j;
  j["kind"] = p.kind;
  j["generators"] = p.generators;
  Json rels = Json::array();
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Json r;
    r["family"] = to_string(p.families[i]);
    r["word"] = word_tokens(p.generators, p.relators[i]);
    rels.push_back(std::move(r));
  }
  j["relators"] = std::move(rels);
  return j;
}

inline Json to_json(const IntMatrix& m) { return m; }

inline Json to_json(const SimpleGraph& g, const ThetaGraph& th) {
  Json j;
  j["graph"] = to_json(th.graph);
  Json meta = Json::array();
  for (const auto& v : th.vertices) {
    Json x;
    x["label"] = v.label;
    x["kind"] = v.kind == ThetaVertex::Kind::edge ? "edge" : "tree";
    x["owner"] = g.label(v.owner);
    const auto& d = th.support[v.owner];
    if (v.kind == ThetaVertex::Kind::edge) {
      const auto [a, b] = d.edges[v.index];
      x["edge"] = {to_json(g, d.nodes[a]), to_json(g, d.nodes[b])};
    } else {
      Json nodes = Json::array();
      for (std::size_t n : th.forests[v.owner].trees[v.index]) nodes.push_back(to_json(g, d.nodes[n]));
      x["tree"] = std::move(nodes);
    }
    meta.push_back(std::move(x));
  }
  j["vertices"] = std::move(meta);
  Json bps = Json::object();
  for (VertexId a = 0; a < g.size(); ++a) {
    const auto& d = th.support[a];
    if (d.nodes.empty()) continue;
    const auto& choice = th.basepoints[a];
    Json entry;
    Json list = Json::array();
    for (std::size_t n : choice.basepoint) list.push_back(to_json(g, d.nodes[n]));
    entry["basepoints"] = std::move(list);
    entry["preferred"] = to_json(g, d.nodes[choice.basepoint[choice.preferred]]);
    bps[g.label(a)] = std::move(entry);
  }
  j["basepoints"] = std::move(bps);
  return j;
}

inline Json to_json(const SimpleGraph& g, const ThetaGraph& th, const GeneratorDictionary& d) {
  const CharacterBasis basis(g);
  std::vector<std::string> gen_names;
  for (const auto& s : basis.generators()) gen_names.push_back(generator_name(g, s));
  const auto& theta_names = th.graph.labels();
  Json j;
  Json phi = Json::object();
  for (std::size_t v = 0; v < d.phi.size(); ++v) phi[theta_names[v]] = word_tokens(gen_names, d.phi[v]);
  Json psi = Json::object();
  for (std::size_t s = 0; s < d.psi.size(); ++s) psi[gen_names[s]] = word_tokens(theta_names, d.psi[s]);
  j["phi"] = std::move(phi);
  j["psi"] = std::move(psi);
  j["phi_abelianized"] = to_json(d.phi_ab);
  j["psi_abelianized"] = to_json(d.psi_ab);
  return j;
}

inline Json to_json(const SimpleGraph& g, const H1Witness& w) {
  Json j;
  j["owner"] = g.label(w.owner);
  Json loop = Json::array();
  for (const auto& c : w.loop) loop.push_back(to_json(g, c));
  j["loop"] = std::move(loop);
  j["chosen_sets"] = w.chosen_sets;
  Json comps = Json::array();
  for (const auto& x : w.components) comps.push_back(to_json(x));
  j["chain_components"] = std::move(comps);
  j["cycle_chain"] = to_json(w.cycle_chain);
  j["cocycle_support"] = w.cocycle_support;
  j["pairing_value"] = format_rational(w.pairing_value);
  j["boundary_zero"] = w.boundary_zero;
  return j;
}

inline Json to_json(const SimpleGraph& g, const PsoVerdict& v) {
  Json j;
  if (v.is_raag) {
    j["verdict"] = "raag";
    j["theta"] = to_json(g, *v.theta);
    j["theta_center_rank"] = v.theta_center_rank;
    j["tree_generators"] = v.theta->tree_generator_count();
    j["relators_verified"] = v.relators_verified;
    j["dictionary"] = to_json(g, *v.theta, *v.dictionary);
  } else {
    j["verdict"] = "not_raag";
    j["owner"] = g.label(v.owner);
    Json loop = Json::array();
    for (const auto& c : v.loop) loop.push_back(to_json(g, c));
    j["loop"] = std::move(loop);
    if (v.witness) j["h1_witness"] = to_json(g, *v.witness);
  }
  return j;
}

/// Envelope shared by every CLI report.
inline Json run_report(const std::string& command, Json input, Json result) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["deterministic"] = true;
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  return j;
}

/// Basepoint overrides: {"a": [["b"], ["c", "d"]], ...}; each listed
/// component becomes the basepoint of its tree, the first one preferred.
inline BasepointOverrides basepoints_from_json(const SimpleGraph& g, const Json& j) {
  if (!j.is_object()) throw InputError("basepoint file must be a JSON object");
  BasepointOverrides out;
  for (const auto& [owner, list] : j.items()) {
    const VertexId a = g.index_of(owner);
    if (!list.is_array()) throw InputError("basepoints for '" + owner + "' must be a list of components");
    for (const auto& comp : list) {
      if (!comp.is_array()) throw InputError("a component is a list of vertex labels");
      VertexMask m = 0;
      for (const auto& v : comp) {
        if (!v.is_string()) throw InputError("vertex labels must be strings");
        m |= bit(g.index_of(v.get<std::string>()));
      }
      out[a].push_back(Component{m});
    }
  }
  return out;
}

}  // namespace raagbns
