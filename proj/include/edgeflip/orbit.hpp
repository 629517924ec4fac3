#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgeflip/edge_space.hpp"
#include "edgeflip/flip_action.hpp"

namespace edgeflip {

using BigInt = boost::multiprecision::cpp_int;

enum class OrbitClass { SimpleWeight, FullCoset, EvenPart, OddPart };

inline std::string orbit_class_label(OrbitClass c, int sw_index) {
  switch (c) {
    case OrbitClass::SimpleWeight: return "SW(" + std::to_string(sw_index) + ")";
    case OrbitClass::FullCoset: return "full";
    case OrbitClass::EvenPart: return "even";
    case OrbitClass::OddPart: return "odd";
  }
  return "?";
}

// Closed-form orbit label: coset representative F plus a class tag. Two
// configurations lie in the same orbit iff their descriptors are equal.
struct OrbitDescriptor {
  EdgeSet coset_rep;
  OrbitClass cls = OrbitClass::SimpleWeight;
  int sw_index = 0;  // meaningful for SimpleWeight only

  bool operator==(const OrbitDescriptor& o) const {
    return coset_rep == o.coset_rep && cls == o.cls &&
           (cls != OrbitClass::SimpleWeight || sw_index == o.sw_index);
  }
  bool operator!=(const OrbitDescriptor& o) const { return !(*this == o); }
  bool operator<(const OrbitDescriptor& o) const {
    if (coset_rep != o.coset_rep) return coset_rep < o.coset_rep;
    if (cls != o.cls) return cls < o.cls;
    return sw_index < o.sw_index;
  }

  std::string label() const { return orbit_class_label(cls, sw_index); }
};

// Bundles the per-graph cached data needed for classification.
struct OrbitContext {
  Graph g;
  SpanningTree tree;
  SimpleBasis basis;
  CosetSolver cosets;

  explicit OrbitContext(const Graph& graph)
      : g(graph), tree(spanning_tree(graph)), basis(simple_basis(graph)),
        cosets(graph, tree) {
    if (g.n < 3) throw DegreeTooSmall("orbit classification needs n >= 3");
  }

  OrbitDescriptor classify(const EdgeSet& config) const {
    EdgeSet f = cosets.representative(config);
    EdgeSet bond = config ^ f;
    int sw = simple_weight(basis, bond);
    OrbitDescriptor d;
    d.coset_rep = f;
    if (f.none()) {
      d.cls = OrbitClass::SimpleWeight;
      d.sw_index = std::min(sw, g.n - sw);
    } else if (g.n % 2 == 1) {
      d.cls = OrbitClass::FullCoset;
    } else {
      d.cls = (sw % 2 == 0) ? OrbitClass::EvenPart : OrbitClass::OddPart;
    }
    return d;
  }
};

inline OrbitDescriptor classify(const Graph& g, const SpanningTree& t,
                                const SimpleBasis& b, const EdgeSet& config) {
  if (g.n < 3) throw DegreeTooSmall("orbit classification needs n >= 3");
  CosetSolver cs(g, t);
  EdgeSet f = cs.representative(config);
  EdgeSet bond = config ^ f;
  int sw = simple_weight(b, bond);
  OrbitDescriptor d;
  d.coset_rep = f;
  if (f.none()) {
    d.cls = OrbitClass::SimpleWeight;
    d.sw_index = std::min(sw, g.n - sw);
  } else if (g.n % 2 == 1) {
    d.cls = OrbitClass::FullCoset;
  } else {
    d.cls = (sw % 2 == 0) ? OrbitClass::EvenPart : OrbitClass::OddPart;
  }
  return d;
}

inline bool same_orbit(const Graph& g, const EdgeSet& a, const EdgeSet& b) {
  OrbitContext ctx(g);
  return ctx.classify(a) == ctx.classify(b);
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline BigInt pow2(int k) { return BigInt(1) << k; }

// Orbit cardinality from the descriptor alone: SW(i) counts bond elements
// of simple weight i or n-i; nonzero cosets split by parity only when n is
// even.
inline BigInt orbit_size(const Graph& g, const OrbitDescriptor& d) {
  int n = g.n;
  switch (d.cls) {
    case OrbitClass::SimpleWeight: {
      int i = d.sw_index;
      if (d.coset_rep.any() || i < 0 || i > (n - 1) / 2 + ((n - 1) % 2))
        throw InvalidDescriptor("SW class with nonzero representative or bad index");
      if (i > n - i) throw InvalidDescriptor("non-canonical SW index");
      if (i == n - i) return binomial(n - 1, i);
      return binomial(n - 1, i) + binomial(n - 1, n - i);
    }
    case OrbitClass::FullCoset:
      if (n % 2 == 0 || d.coset_rep.none())
        throw InvalidDescriptor("full coset requires n odd and F nonzero");
      return pow2(n - 1);
    case OrbitClass::EvenPart:
    case OrbitClass::OddPart:
      if (n % 2 == 1 || d.coset_rep.none())
        throw InvalidDescriptor("half cosets require n even and F nonzero");
      return pow2(n - 2);
  }
  throw InvalidDescriptor("unknown class");
}

// Total number of orbits of the edge space.
inline BigInt orbit_count(const Graph& g) {
  if (g.n < 3) throw DegreeTooSmall("orbit count needs n >= 3");
  int n = g.n;
  int zero_coset = (n - 1) / 2 + ((n - 1) % 2) + 1;  // ceil((n-1)/2) + 1
  BigInt nonzero = (pow2(g.m() - n + 1) - 1) * (n % 2 == 1 ? 1 : 2);
  return zero_coset + nonzero;
}

inline std::vector<EdgeSet> enumerate_orbit_restricted(const Graph& g,
                                                       const EdgeSet& config,
                                                       const std::vector<int>& moves,
                                                       std::size_t cap) {
  std::unordered_set<EdgeSet, GfVecHash> seen{config};
  std::deque<EdgeSet> frontier{config};
  while (!frontier.empty()) {
    EdgeSet cur = frontier.front();
    frontier.pop_front();
    for (int e : moves) {
      EdgeSet next = apply_move(g, cur, e);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("orbit cap " + std::to_string(cap));
        frontier.push_back(next);
      }
    }
  }
  std::vector<EdgeSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// BFS closure of a configuration under all moves; test oracle, sorted.
inline std::vector<EdgeSet> enumerate_orbit(const Graph& g, const EdgeSet& config,
                                            std::size_t cap = 4'000'000) {
  return enumerate_orbit_restricted(g, config, all_edge_indices(g), cap);
}

// Predicted simple weight of E(eps) + rho_eps G from sw(G) and the overlap
// of the two Delta-decompositions; split on whether the anchor lies in eps.
inline int sw_update_predict(const SimpleBasis& b, const Graph& g,
                             const EdgeSet& G, int eps) {
  if (eps < 0 || eps >= g.m()) throw EdgeOutOfRange(std::to_string(eps));
  auto dg = delta_decompose(b, G);
  if (!dg) throw NotInBond("sw update needs G in the bond space");
  auto de = delta_decompose(b, edge_neighborhood(g, eps));
  if (!de) throw Error("InternalError", "E(eps) not in bond space");
  int i = static_cast<int>(dg->size());
  std::vector<int> inter;
  std::set_intersection(dg->begin(), dg->end(), de->begin(), de->end(),
                        std::back_inserter(inter));
  int overlap = static_cast<int>(inter.size());
  auto [x, y] = g.edges[eps];
  if (x != b.anchor && y != b.anchor) {
    if (overlap == 0) return i + 2;
    if (overlap == 1) return i;
    return i - 2;
  }
  if (overlap == i - 1) return i;
  return g.n - i - 2;
}

}  // namespace edgeflip
