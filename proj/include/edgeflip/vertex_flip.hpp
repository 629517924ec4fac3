#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "edgeflip/edge_space.hpp"
#include "edgeflip/group_structure.hpp"

namespace edgeflip {

inline VertexSet neighbor_set(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw VertexOutOfRange(std::to_string(v));
  VertexSet s(g.n);
  for (int w : g.adj[v]) s.set(w);
  return s;
}

// Lit-only sigma-game move: if v is black, toggle its neighbors.
inline VertexSet vertex_move(const Graph& g, const VertexSet& u, int v) {
  if (v < 0 || v >= g.n) throw VertexOutOfRange(std::to_string(v));
  if (u.size() != static_cast<std::size_t>(g.n))
    throw DimensionMismatch("vertex set size differs from n");
  if (!u.test(v)) return u;
  return u ^ neighbor_set(g, v);
}

// Matrix of s_v on the vertex space.
inline Gf2Matrix vertex_generator(const Graph& g, int v) {
  Gf2Matrix mat = Gf2Matrix::identity(g.n);
  for (int w : g.adj[v]) mat.set(w, v);
  return mat;
}

// The index bijection between edge sets of X and vertex sets of L(X):
// canonical edge i of X is vertex i of the line graph. Returned explicitly;
// the move correspondence is a tested property.
inline std::vector<int> line_graph_transport(const Graph& g) {
  if (g.m() < 1) throw EdgeOutOfRange("needs at least one edge");
  std::vector<int> map(g.m());
  for (int i = 0; i < g.m(); ++i) map[i] = i;
  return map;
}

// Cayley BFS order of the vertex-flipping group.
inline BigInt vertex_group_order_bruteforce(const Graph& g,
                                            std::size_t cap = 2'000'000) {
  std::vector<Gf2Matrix> gens;
  for (int v = 0; v < g.n; ++v) gens.push_back(vertex_generator(g, v));
  std::unordered_set<Gf2Matrix, Gf2MatrixHash> seen;
  std::deque<Gf2Matrix> frontier;
  Gf2Matrix id = Gf2Matrix::identity(g.n);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Gf2Matrix cur = frontier.front();
    frontier.pop_front();
    for (const auto& gm : gens) {
      Gf2Matrix next = gm * cur;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("vertex group cap " + std::to_string(cap));
        frontier.push_back(next);
      }
    }
  }
  return BigInt(seen.size());
}

// Orbit closure of a vertex configuration, test oracle.
inline std::vector<VertexSet> enumerate_vertex_orbit(const Graph& g,
                                                     const VertexSet& config,
                                                     std::size_t cap = 4'000'000) {
  std::unordered_set<VertexSet, GfVecHash> seen{config};
  std::deque<VertexSet> frontier{config};
  while (!frontier.empty()) {
    VertexSet cur = frontier.front();
    frontier.pop_front();
    for (int v = 0; v < g.n; ++v) {
      VertexSet next = vertex_move(g, cur, v);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("orbit cap");
        frontier.push_back(next);
      }
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// The one-attachment-vertex family: vertices 0..m-1, the path 1-2-...-(m-1)
// plus edges {0,i_t} for a strictly increasing attachment list.
struct YGraphSpec {
  int m = 0;
  std::vector<int> attachments;

  void validate() const {
    if (m < 2) throw InvalidSpec("Y spec needs m >= 2");
    if (attachments.empty()) throw InvalidSpec("attachment list is empty");
    int prev = 0;
    for (int a : attachments) {
      if (a <= prev || a > m - 1)
        throw InvalidSpec("attachments must be strictly increasing in [1, m-1]");
      prev = a;
    }
  }
};

inline Graph build_Y(const YGraphSpec& spec) {
  spec.validate();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i + 1 <= spec.m - 1; ++i) pairs.emplace_back(i, i + 1);
  for (int a : spec.attachments) pairs.emplace_back(0, a);
  return build_graph(spec.m, pairs);
}

// pi_1 = sum_t (-1)^t i_t, plus m when the attachment count is odd.
inline int pi1(const YGraphSpec& spec) {
  spec.validate();
  int acc = 0;
  int sign = -1;
  for (int a : spec.attachments) {
    acc += sign * a;
    sign = -sign;
  }
  if (spec.attachments.size() % 2 == 1) acc += spec.m;
  if (acc < 1 || acc > spec.m - 1)
    throw Error("InternalError", "pi1 out of range [1, m-1]");
  return acc;
}

struct VertexGroupDescriptor {
  enum class Kind { SymmetricGroup, SemidirectTwoGroup, UnclassifiedByPi1 };
  Kind kind = Kind::UnclassifiedByPi1;
  int degree = 0;    // SymmetricGroup: degree m+1; SemidirectTwoGroup: S_m
  int exponent = 0;  // SemidirectTwoGroup: power of Z/2Z
  int pi1_value = 0;

  // Known order for the two classified kinds.
  BigInt order() const {
    switch (kind) {
      case Kind::SymmetricGroup: return factorial(degree);
      case Kind::SemidirectTwoGroup: return pow2(exponent) * factorial(degree);
      case Kind::UnclassifiedByPi1:
        throw InvalidDescriptor("no closed-form order for this pi1 value");
    }
    throw InvalidDescriptor("unknown kind");
  }

  std::string label() const {
    switch (kind) {
      case Kind::SymmetricGroup: return "S_" + std::to_string(degree);
      case Kind::SemidirectTwoGroup:
        return "(Z/2Z)^" + std::to_string(exponent) + " x| S_" +
               std::to_string(degree);
      case Kind::UnclassifiedByPi1:
        return "unclassified(pi1=" + std::to_string(pi1_value) + ")";
    }
    return "?";
  }
};

// Classification of the vertex-flipping group of Y by pi_1: values 1 and
// m-1 give S_{m+1}; values 2 and m-2 give a 2-group extension of S_m whose
// exponent depends on the parity of m; all other values are reported
// honestly as unclassified.
inline VertexGroupDescriptor classify_Y(const YGraphSpec& spec) {
  spec.validate();
  if (spec.m < 3) throw InvalidSpec("classification needs m >= 3");
  int p = pi1(spec);
  VertexGroupDescriptor d;
  d.pi1_value = p;
  if (p == 1 || p == spec.m - 1) {
    d.kind = VertexGroupDescriptor::Kind::SymmetricGroup;
    d.degree = spec.m + 1;
  } else if (p == 2 || p == spec.m - 2) {
    d.kind = VertexGroupDescriptor::Kind::SemidirectTwoGroup;
    d.degree = spec.m;
    d.exponent = spec.m % 2 == 1 ? spec.m - 1 : spec.m - 2;
  } else {
    d.kind = VertexGroupDescriptor::Kind::UnclassifiedByPi1;
  }
  return d;
}

}  // namespace edgeflip
