#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgeflip/graph.hpp"
#include "edgeflip/vertex_flip.hpp"

namespace edgeflip {

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return build_graph(n, pairs);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(0, n - 1);
  return build_graph(n, pairs);
}

// K_{1,n-1} with hub 0.
inline Graph star_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(0, i);
  return build_graph(n, pairs);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return build_graph(n, pairs);
}

// Triangle plus a pendant vertex.
inline Graph paw_graph() {
  return build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Every acceptance graph ships here.
inline std::vector<NamedGraph> builtin_corpus() {
  std::vector<NamedGraph> c;
  c.push_back({"k3", complete_graph(3)});
  c.push_back({"p3", path_graph(3)});
  c.push_back({"p4", path_graph(4)});
  c.push_back({"k13", star_graph(4)});
  c.push_back({"k14", star_graph(5)});
  c.push_back({"c4", cycle_graph(4)});
  c.push_back({"c5", cycle_graph(5)});
  c.push_back({"k4", complete_graph(4)});
  c.push_back({"paw", paw_graph()});
  c.push_back({"y5_24", build_Y({5, {2, 4}})});
  c.push_back({"y6_2", build_Y({6, {2}})});
  c.push_back({"y6_4", build_Y({6, {4}})});
  return c;
}

// All connected simple graphs on exactly n labeled vertices.
inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<std::pair<int, int>> all_pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
  std::vector<Graph> out;
  int np = static_cast<int>(all_pairs.size());
  for (unsigned mask = 0; mask < (1u << np); ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (int b = 0; b < np; ++b)
      if (mask & (1u << b)) pairs.push_back(all_pairs[b]);
    try {
      out.push_back(build_graph(n, pairs));
    } catch (const NotConnected&) {
    }
  }
  return out;
}

// All Y specs for a given m (nonempty attachment subsets of [1, m-1]).
inline std::vector<YGraphSpec> all_y_specs(int m) {
  std::vector<YGraphSpec> out;
  int slots = m - 1;
  for (unsigned mask = 1; mask < (1u << slots); ++mask) {
    YGraphSpec spec;
    spec.m = m;
    for (int b = 0; b < slots; ++b)
      if (mask & (1u << b)) spec.attachments.push_back(b + 1);
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace edgeflip
