#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgeflip/edge_space.hpp"
#include "edgeflip/flip_action.hpp"
#include "edgeflip/graph.hpp"

namespace edgeflip {

using nlohmann::json;

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph JSON needs {\"n\": int, \"edges\": [[u,v],...]}");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [u,v]");
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build_graph(n, pairs);
}

// Text format: first line "n m", then m lines "u v".
inline Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("expected header line \"n m\"");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw ParseError("expected edge line \"u v\"");
    pairs.emplace_back(u, v);
  }
  return build_graph(n, pairs);
}

// Accepts either format; JSON when the first non-space character is '{'.
inline Graph parse_graph(const std::string& text) {
  for (char c : text) {
    if (isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return graph_from_json(json::parse(text));
    break;
  }
  return graph_from_text(text);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return json{{"n", g.n}, {"edges", edges}};
}

// "0-1,1-2"; the empty set is the literal "-".
inline EdgeSet parse_edge_set(const Graph& g, const std::string& text) {
  EdgeSet s(g.m());
  if (text == "-") return s;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    auto dash = token.find('-');
    if (dash == std::string::npos) throw ParseError("expected \"u-v\" pairs");
    int u = std::stoi(token.substr(0, dash));
    int v = std::stoi(token.substr(dash + 1));
    int e = g.edge_index(u, v);
    if (e < 0)
      throw EdgeOutOfRange(std::to_string(u) + "-" + std::to_string(v) +
                           " is not an edge");
    s.flip(e);
  }
  return s;
}

inline std::string format_edge_set(const Graph& g, const EdgeSet& s) {
  if (s.none()) return "-";
  std::string out;
  for (int e : s.to_indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(g.edges[e].first) + "-" +
           std::to_string(g.edges[e].second);
  }
  return out;
}

inline json edge_set_to_json(const Graph& g, const EdgeSet& s) {
  json arr = json::array();
  for (int e : s.to_indices()) arr.push_back({g.edges[e].first, g.edges[e].second});
  return arr;
}

// Move sequences reuse the pair syntax but keep order and repetition.
inline MoveSequence parse_move_sequence(const Graph& g, const std::string& text) {
  MoveSequence w;
  if (text == "-" || text.empty()) return w;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    auto dash = token.find('-');
    if (dash == std::string::npos) throw ParseError("expected \"u-v\" pairs");
    int u = std::stoi(token.substr(0, dash));
    int v = std::stoi(token.substr(dash + 1));
    int e = g.edge_index(u, v);
    if (e < 0)
      throw EdgeOutOfRange(std::to_string(u) + "-" + std::to_string(v) +
                           " is not an edge");
    w.push_back(e);
  }
  return w;
}

inline std::string format_move_sequence(const Graph& g, const MoveSequence& w) {
  std::string out;
  for (int e : w) {
    if (!out.empty()) out += ',';
    out += std::to_string(g.edges[e].first) + "-" +
           std::to_string(g.edges[e].second);
  }
  return out;
}

}  // namespace edgeflip
