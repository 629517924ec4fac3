#pragma once

#include <optional>
#include <vector>

#include "edgeflip/gf2.hpp"
#include "edgeflip/graph.hpp"

namespace edgeflip {

// An element of the edge space: GF(2) vector of length m indexed by
// canonical edge index. Addition (^) is symmetric difference.
using EdgeSet = GfVec;
// An element of the vertex space: GF(2) vector of length n.
using VertexSet = GfVec;

inline EdgeSet sym_diff(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

inline EdgeSet edge_set_of(const Graph& g, std::initializer_list<int> idx) {
  EdgeSet s(g.m());
  for (int i : idx) s.set(i);
  return s;
}

// E(v): edges incident to v.
inline EdgeSet vertex_cut(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw VertexOutOfRange(std::to_string(v));
  EdgeSet s(g.m());
  for (int w : g.adj[v]) s.set(g.edge_index(v, w));
  return s;
}

// E(U): edges with exactly one endpoint in U.
inline EdgeSet edge_cut(const Graph& g, const VertexSet& u) {
  if (u.size() != static_cast<std::size_t>(g.n))
    throw DimensionMismatch("vertex set size differs from n");
  EdgeSet s(g.m());
  for (int e = 0; e < g.m(); ++e) {
    auto [x, y] = g.edges[e];
    if (u.test(x) != u.test(y)) s.set(e);
  }
  return s;
}

// The simple basis of the bond space: {E(v) | v != anchor} with anchor
// fixed to vertex 0, basis vectors in ascending vertex order. Also caches
// all n vertex cuts and the echelonized solver used for decomposition.
struct SimpleBasis {
  int n = 0;
  int m = 0;
  int anchor = 0;
  std::vector<EdgeSet> cuts;     // E(0), ..., E(n-1)
  std::vector<EdgeSet> vectors;  // E(1), ..., E(n-1)
  Gf2Solver solver{0};

  bool in_bond(const EdgeSet& s) const { return solver.contains(s); }
};

inline SimpleBasis simple_basis(const Graph& g) {
  if (g.n < 2) throw DegreeTooSmall("simple basis needs n >= 2");
  SimpleBasis b;
  b.n = g.n;
  b.m = g.m();
  b.solver = Gf2Solver(g.m());
  for (int v = 0; v < g.n; ++v) b.cuts.push_back(vertex_cut(g, v));
  for (int v = 1; v < g.n; ++v) {
    b.vectors.push_back(b.cuts[v]);
    if (!b.solver.add_column(b.cuts[v]))
      throw Error("InternalError", "simple basis vectors are dependent");
  }
  return b;
}

// The unique S subset of V-{anchor} with sum of E(v), v in S, equal to G;
// nullopt when G is not in the bond space (this is the membership test).
inline std::optional<std::vector<int>> delta_decompose(const SimpleBasis& b,
                                                       const EdgeSet& G) {
  auto sol = b.solver.solve(G);
  if (!sol) return std::nullopt;
  std::vector<int> verts;
  for (int c : *sol) verts.push_back(c + 1);  // column c is E(c+1)
  return verts;
}

inline int simple_weight(const SimpleBasis& b, const EdgeSet& G) {
  auto d = delta_decompose(b, G);
  if (!d) throw NotInBond("simple weight of a non-bond element");
  return static_cast<int>(d->size());
}

// Solver over {E(v) | v != 0} followed by the cotree singletons; cached per
// (graph, tree) so repeated coset queries avoid re-elimination.
struct CosetSolver {
  int n = 0;
  int m = 0;
  std::vector<int> cotree;
  Gf2Solver solver{0};

  CosetSolver(const Graph& g, const SpanningTree& t)
      : n(g.n), m(g.m()), cotree(cotree_edges(g, t)), solver(g.m()) {
    for (int v = 1; v < g.n; ++v) solver.add_column(vertex_cut(g, v));
    for (int e : cotree) solver.add_column(GfVec::unit(g.m(), e));
  }

  // The unique F subset of E-T with G + F in the bond space.
  EdgeSet representative(const EdgeSet& G) const {
    auto sol = solver.solve(G);
    if (!sol)
      throw Error("InternalError", "basis of edge space failed to span");
    EdgeSet f(m);
    for (int c : *sol)
      if (c >= n - 1) f.set(cotree[c - (n - 1)]);
    return f;
  }
};

inline EdgeSet coset_representative(const Graph& g, const SpanningTree& t,
                                    const EdgeSet& G) {
  return CosetSolver(g, t).representative(G);
}

}  // namespace edgeflip
