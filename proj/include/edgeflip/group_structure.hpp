#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "edgeflip/flip_action.hpp"
#include "edgeflip/orbit.hpp"

namespace edgeflip {

// Element of B^{m-n+1} x| S_n: a tuple of bond-space elements (ordered by
// ascending cotree edge index) and a permutation of degree n.
struct SemidirectElement {
  std::vector<EdgeSet> translations;
  Permutation perm;

  bool operator==(const SemidirectElement& o) const {
    return translations == o.translations && perm == o.perm;
  }
  bool operator!=(const SemidirectElement& o) const { return !(*this == o); }
  bool operator<(const SemidirectElement& o) const {
    if (translations != o.translations) return translations < o.translations;
    return perm < o.perm;
  }
};

inline SemidirectElement semidirect_identity(int tuple_len, int n, int m) {
  SemidirectElement e;
  e.translations.assign(tuple_len, EdgeSet(m));
  e.perm = Permutation::identity(n);
  return e;
}

// theta(sigma) on one bond element: decompose over the simple basis, send
// each E(v) to E(sigma(v)), re-sum. E(anchor) images fall out of the vertex
// cut table directly.
inline EdgeSet theta_apply_one(const SimpleBasis& b, const Permutation& sigma,
                               const EdgeSet& G) {
  auto dec = delta_decompose(b, G);
  if (!dec) throw NotInBond("theta applies to bond elements only");
  EdgeSet out(b.m);
  for (int v : *dec) out ^= b.cuts[sigma.images[v]];
  return out;
}

inline std::vector<EdgeSet> theta_apply(const SimpleBasis& b,
                                        const Permutation& sigma,
                                        const std::vector<EdgeSet>& tup) {
  std::vector<EdgeSet> out;
  out.reserve(tup.size());
  for (const auto& G : tup) out.push_back(theta_apply_one(b, sigma, G));
  return out;
}

// ((G_i), sigma) ((H_i), tau) = ((G_i) + theta(sigma)(H_i), sigma tau).
inline SemidirectElement semidirect_mul(const SimpleBasis& b,
                                        const SemidirectElement& a,
                                        const SemidirectElement& c) {
  if (a.translations.size() != c.translations.size())
    throw DimensionMismatch("tuple lengths differ");
  SemidirectElement r;
  r.translations.reserve(a.translations.size());
  auto twisted = theta_apply(b, a.perm, c.translations);
  for (std::size_t i = 0; i < a.translations.size(); ++i)
    r.translations.push_back(a.translations[i] ^ twisted[i]);
  r.perm = compose(a.perm, c.perm);
  return r;
}

// gamma(g) = (({eps_i} + g{eps_i})_i, alpha(g)) over the cotree edges in
// ascending order.
inline SemidirectElement gamma(const Graph& g, const SpanningTree& t,
                               const GroupElement& elem) {
  if (g.n < 3) throw DegreeTooSmall("gamma needs n >= 3");
  SemidirectElement r;
  for (int e : cotree_edges(g, t)) {
    EdgeSet single = GfVec::unit(g.m(), e);
    r.translations.push_back(single ^ elem.apply(single));
  }
  r.perm = alpha(g, elem);
  return r;
}

struct StructureDescriptor {
  int n = 0;
  int m = 0;
  int k = 0;
  bool n_even = false;
  BigInt order;

  std::string branch() const { return n_even ? "even" : "odd"; }
};

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Structure theorem data: W_E(X) is a semidirect product of (Z/2Z)^k and
// S_n with k = (n-1)(m-n+1) for n odd, (n-2)(m-n+1) for n even.
inline StructureDescriptor structure(const Graph& g) {
  if (g.n < 3) throw DegreeTooSmall("structure needs n >= 3");
  StructureDescriptor d;
  d.n = g.n;
  d.m = g.m();
  d.n_even = g.n % 2 == 0;
  d.k = (d.n_even ? g.n - 2 : g.n - 1) * (d.m - d.n + 1);
  d.order = pow2(d.k) * factorial(g.n);
  return d;
}

// Isomorphism criterion: equal vertex and edge counts.
inline bool groups_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.n < 3 || g2.n < 3) throw DegreeTooSmall("criterion needs n >= 3");
  return g1.n == g2.n && g1.m() == g2.m();
}

struct VerifyReport {
  BigInt group_order;
  BigInt expected_order;
  std::size_t image_size = 0;
  bool order_ok = false;
  bool injective_ok = false;
  bool homomorphism_ok = false;
  bool parity_ok = false;
  bool closure_ok = false;

  bool passed() const {
    return order_ok && injective_ok && homomorphism_ok && parity_ok && closure_ok;
  }
};

// Exercises the structure theorem on one graph: BFS the whole group, map it
// through gamma, and check order, injectivity, the homomorphism law, image
// closure under semidirect multiplication, and the parity constraint on
// translation components.
inline VerifyReport verify_structure(const Graph& g, std::size_t cap = 2'000'000) {
  if (g.n < 3) throw DegreeTooSmall("verify needs n >= 3");
  SpanningTree t = spanning_tree(g);
  SimpleBasis b = simple_basis(g);
  auto group = generate_subgroup(g, all_edge_indices(g), cap);

  VerifyReport rep;
  rep.group_order = group.size();
  rep.expected_order = structure(g).order;
  rep.order_ok = rep.group_order == rep.expected_order;

  std::vector<SemidirectElement> images;
  images.reserve(group.size());
  bool parity_ok = true;
  for (const auto& elem : group) {
    SemidirectElement img = gamma(g, t, elem);
    for (const auto& comp : img.translations) {
      auto dec = delta_decompose(b, comp);
      if (!dec || (g.n % 2 == 0 && dec->size() % 2 != 0)) parity_ok = false;
    }
    images.push_back(std::move(img));
  }
  rep.parity_ok = parity_ok;

  std::set<SemidirectElement> image_set(images.begin(), images.end());
  rep.image_size = image_set.size();
  rep.injective_ok = rep.image_size == group.size();

  // exhaustive pairs for small groups, deterministic sampling above
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (group.size() <= 200) {
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = 0; j < group.size(); ++j) pairs.emplace_back(i, j);
  } else {
    std::mt19937 rng(0);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int s = 0; s < 500; ++s) pairs.emplace_back(pick(rng), pick(rng));
  }
  bool hom_ok = true;
  bool closure_ok = true;
  for (auto [i, j] : pairs) {
    SemidirectElement prod = semidirect_mul(b, images[i], images[j]);
    if (prod != gamma(g, t, compose(group[i], group[j]))) hom_ok = false;
    if (!image_set.count(prod)) closure_ok = false;
  }
  rep.homomorphism_ok = hom_ok;
  rep.closure_ok = closure_ok;
  return rep;
}

}  // namespace edgeflip
