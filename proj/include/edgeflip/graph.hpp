#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "edgeflip/errors.hpp"

namespace edgeflip {

// Finite simple connected graph with canonical edge ordering: edges are
// stored as (u,v) pairs with u<v, sorted lexicographically; the position in
// the list is the canonical edge index used throughout the library.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;  // ascending neighbor lists

  int m() const { return static_cast<int>(edges.size()); }

  bool adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  // Canonical index of edge {u,v}, or -1 if absent.
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
  }
};

inline Graph build_graph(int n, std::vector<std::pair<int, int>> pairs) {
  if (n <= 0) throw EmptyVertexSet("vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw VertexOutOfRange("edge endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw NotSimple("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw NotSimple("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  Graph g;
  g.n = n;
  g.edges.assign(seen.begin(), seen.end());
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  // connectivity
  std::vector<char> vis(n, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        q.push(w);
      }
  }
  if (count != n) throw NotConnected("graph has more than one component");
  return g;
}

struct SpanningTree {
  std::vector<int> tree_edges;  // ascending canonical edge indices
  bool contains(int e) const {
    return std::binary_search(tree_edges.begin(), tree_edges.end(), e);
  }
};

// Deterministic spanning tree: BFS from vertex 0, neighbors in ascending
// label order.
inline SpanningTree spanning_tree(const Graph& g) {
  std::vector<char> vis(g.n, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  SpanningTree t;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        t.tree_edges.push_back(g.edge_index(v, w));
        q.push(w);
      }
  }
  std::sort(t.tree_edges.begin(), t.tree_edges.end());
  return t;
}

// Edge indices not in the tree, ascending.
inline std::vector<int> cotree_edges(const Graph& g, const SpanningTree& t) {
  std::vector<int> out;
  for (int e = 0; e < g.m(); ++e)
    if (!t.contains(e)) out.push_back(e);
  return out;
}

// Graph on the edges of g; vertices adjacent iff the underlying edges share
// exactly one endpoint.
inline Graph line_graph(const Graph& g) {
  if (g.m() < 1) throw EdgeOutOfRange("line graph needs at least one edge");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < g.m(); ++i)
    for (int j = i + 1; j < g.m(); ++j) {
      auto [a, b] = g.edges[i];
      auto [c, d] = g.edges[j];
      int shared = (a == c) + (a == d) + (b == c) + (b == d);
      if (shared == 1) pairs.emplace_back(i, j);
    }
  return build_graph(g.m(), pairs);
}

namespace detail {

inline bool path_dfs(const Graph& g, std::vector<char>& used, int last, int left) {
  if (left == 0) return true;
  for (int w : g.adj[last]) {
    if (used[w]) continue;
    used[w] = 1;
    if (path_dfs(g, used, w, left - 1)) return true;
    used[w] = 0;
  }
  return false;
}

inline bool induced_path_dfs(const Graph& g, std::vector<int>& path,
                             std::vector<char>& used, int left) {
  if (left == 0) return true;
  int last = path.back();
  for (int w : g.adj[last]) {
    if (used[w]) continue;
    // w may touch only the current endpoint of the path
    bool ok = true;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (g.adjacent(w, path[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    used[w] = 1;
    path.push_back(w);
    if (induced_path_dfs(g, path, used, left - 1)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

}  // namespace detail

// Exhaustive search for a simple path with k edges (desk scale only).
inline bool has_path_of_k_edges(const Graph& g, int k) {
  if (g.m() > 20) throw SizeLimit("exhaustive path search limited to m <= 20");
  if (k < 1 || k > g.m()) throw EdgeOutOfRange("k outside 1..m");
  for (int s = 0; s < g.n; ++s) {
    std::vector<char> used(g.n, 0);
    used[s] = 1;
    if (detail::path_dfs(g, used, s, k)) return true;
  }
  return false;
}

// Exhaustive search for an induced path on k vertices.
inline bool has_induced_path_of_k_vertices(const Graph& g, int k) {
  if (g.n > 20) throw SizeLimit("exhaustive induced-path search limited to n <= 20");
  if (k < 1 || k > g.n) throw VertexOutOfRange("k outside 1..n");
  if (k == 1) return true;
  for (int s = 0; s < g.n; ++s) {
    std::vector<char> used(g.n, 0);
    std::vector<int> path{s};
    used[s] = 1;
    if (detail::induced_path_dfs(g, path, used, k - 1)) return true;
  }
  return false;
}

}  // namespace edgeflip
