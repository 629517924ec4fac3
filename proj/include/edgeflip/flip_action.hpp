#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_set>
#include <vector>

#include "edgeflip/edge_space.hpp"
#include "edgeflip/gf2.hpp"
#include "edgeflip/graph.hpp"

namespace edgeflip {

// A move sequence is an ordered list of canonical edge indices, applied
// left-to-right (first listed = first applied).
using MoveSequence = std::vector<int>;

// E(eps) for eps = {x,y}: the edges sharing exactly one endpoint with eps.
inline EdgeSet edge_neighborhood(const Graph& g, int eps) {
  if (eps < 0 || eps >= g.m()) throw EdgeOutOfRange(std::to_string(eps));
  auto [x, y] = g.edges[eps];
  VertexSet u(g.n);
  u.set(x);
  u.set(y);
  return edge_cut(g, u);
}

// One move: if eps is black, toggle all adjacent edges; otherwise no-op.
inline EdgeSet apply_move(const Graph& g, const EdgeSet& config, int eps) {
  if (eps < 0 || eps >= g.m()) throw EdgeOutOfRange(std::to_string(eps));
  if (!config.test(eps)) return config;
  return config ^ edge_neighborhood(g, eps);
}

// Invertible GF(2)-linear map on the edge space.
struct GroupElement {
  Gf2Matrix mat;

  bool operator==(const GroupElement& o) const { return mat == o.mat; }
  bool operator!=(const GroupElement& o) const { return mat != o.mat; }
  bool operator<(const GroupElement& o) const { return mat < o.mat; }

  EdgeSet apply(const EdgeSet& config) const { return mat.mul(config); }
  bool is_identity() const { return mat == Gf2Matrix::identity(mat.dim()); }
};

inline GroupElement identity_element(int m) {
  return {Gf2Matrix::identity(static_cast<std::size_t>(m))};
}

// Matrix of the generator: column j is e_j for j != eps, and
// e_eps + E(eps) for j = eps. An involution.
inline GroupElement generator(const Graph& g, int eps) {
  EdgeSet nb = edge_neighborhood(g, eps);
  Gf2Matrix mat = Gf2Matrix::identity(g.m());
  for (int i : nb.to_indices()) mat.set(i, eps);
  return {mat};
}

// Functional composition a after b.
inline GroupElement compose(const GroupElement& a, const GroupElement& b) {
  return {a.mat * b.mat};
}

// Product of generators realizing the word under left-to-right application.
inline GroupElement element_of_word(const Graph& g, const MoveSequence& w) {
  GroupElement e = identity_element(g.m());
  for (int mv : w) e = compose(generator(g, mv), e);
  return e;
}

// Permutation of the vertex cuts {E(v)}, recorded on vertex labels:
// images[v] = w means the element maps E(v) to E(w). Degree n >= 3 only
// (below that the cuts are not distinct).
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n) {
    Permutation p;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[i] = i;
    return p;
  }

  int degree() const { return static_cast<int>(images.size()); }
  bool is_identity() const { return *this == identity(degree()); }

  bool operator==(const Permutation& o) const { return images == o.images; }
  bool operator!=(const Permutation& o) const { return images != o.images; }
  bool operator<(const Permutation& o) const { return images < o.images; }
};

// (a after b): images[v] = a[b[v]], matching composition of group elements.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("permutation degrees");
  Permutation c;
  c.images.resize(a.degree());
  for (int v = 0; v < a.degree(); ++v) c.images[v] = a.images[b.images[v]];
  return c;
}

inline Permutation inverse(const Permutation& p) {
  Permutation q;
  q.images.resize(p.degree());
  for (int v = 0; v < p.degree(); ++v) q.images[p.images[v]] = v;
  return q;
}

inline Permutation transposition(int n, int a, int b) {
  Permutation p = Permutation::identity(n);
  p.images[a] = b;
  p.images[b] = a;
  return p;
}

// The homomorphism onto S_n: maps elem to the permutation v -> w with
// elem * E(v) = E(w). Fails when elem is not a word product.
inline Permutation alpha(const Graph& g, const GroupElement& elem) {
  if (g.n < 3) throw DegreeTooSmall("alpha needs n >= 3");
  std::vector<EdgeSet> cuts;
  for (int v = 0; v < g.n; ++v) cuts.push_back(vertex_cut(g, v));
  Permutation p;
  p.images.resize(g.n, -1);
  std::vector<char> hit(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    EdgeSet img = elem.apply(cuts[v]);
    int w = -1;
    for (int c = 0; c < g.n; ++c)
      if (cuts[c] == img) {
        w = c;
        break;
      }
    if (w < 0 || hit[w])
      throw NotAVertexCutImage("image of E(" + std::to_string(v) +
                               ") is not a distinct vertex cut");
    p.images[v] = w;
    hit[w] = 1;
  }
  return p;
}

// Word in tree-edge moves whose alpha-image is exactly the transposition
// (E(u),E(v)): the palindrome [e_{k-1},...,e_1,e_0,e_1,...,e_{k-1}] along
// the unique tree path u = u_0, ..., u_k = v.
inline MoveSequence word_for_transposition(const Graph& g, const SpanningTree& t,
                                           int u, int v) {
  if (u == v) throw SameVertex(std::to_string(u));
  if (g.n < 3) throw DegreeTooSmall("needs n >= 3");
  if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw VertexOutOfRange("");
  // tree adjacency
  std::vector<std::vector<int>> tadj(g.n);
  for (int e : t.tree_edges) {
    auto [x, y] = g.edges[e];
    tadj[x].push_back(y);
    tadj[y].push_back(x);
  }
  std::vector<int> prev(g.n, -1);
  std::deque<int> q{u};
  prev[u] = u;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : tadj[x])
      if (prev[y] < 0) {
        prev[y] = x;
        q.push_back(y);
      }
  }
  std::vector<int> path;  // edge indices u->v
  for (int x = v; x != u; x = prev[x]) path.push_back(g.edge_index(x, prev[x]));
  std::reverse(path.begin(), path.end());
  int k = static_cast<int>(path.size());
  MoveSequence w;
  for (int i = k - 1; i >= 0; --i) w.push_back(path[i]);
  for (int i = 1; i < k; ++i) w.push_back(path[i]);
  return w;
}

// Brute-force Cayley BFS over the group generated by the given edge moves,
// deduplicating by matrix value. Deterministic: result sorted by packed
// matrix key.
inline std::vector<GroupElement> generate_subgroup(const Graph& g,
                                                   const std::vector<int>& gens,
                                                   std::size_t cap = 2'000'000) {
  std::vector<Gf2Matrix> gen_mats;
  for (int e : gens) gen_mats.push_back(generator(g, e).mat);
  std::unordered_set<Gf2Matrix, Gf2MatrixHash> seen;
  std::deque<Gf2Matrix> frontier;
  Gf2Matrix id = Gf2Matrix::identity(g.m());
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Gf2Matrix cur = frontier.front();
    frontier.pop_front();
    for (const auto& gm : gen_mats) {
      Gf2Matrix next = gm * cur;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("subgroup cap " + std::to_string(cap));
        frontier.push_back(next);
      }
    }
  }
  std::vector<GroupElement> out;
  out.reserve(seen.size());
  for (auto& mt : seen) out.push_back({mt});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> all_edge_indices(const Graph& g) {
  std::vector<int> v(g.m());
  for (int i = 0; i < g.m(); ++i) v[i] = i;
  return v;
}

}  // namespace edgeflip
