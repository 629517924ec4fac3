#include <doctest.h>

#include <random>
#include <set>

#include "edgeflip/corpus.hpp"
#include "edgeflip/flip_action.hpp"

using namespace edgeflip;

namespace {

EdgeSet config_of_mask(int m, unsigned mask) {
  EdgeSet s(m);
  for (int b = 0; b < m; ++b)
    if (mask & (1u << b)) s.set(b);
  return s;
}

MoveSequence random_word(std::mt19937& rng, int m, int len) {
  MoveSequence w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % m));
  return w;
}

}  // namespace

TEST_CASE("apply_move follows the move rule") {
  Graph k3 = complete_graph(3);
  // e0 = (0,1) is black: toggle its adjacent edges e1, e2
  CHECK(apply_move(k3, edge_set_of(k3, {0}), 0) == edge_set_of(k3, {0, 1, 2}));
  // white edge: no-op
  CHECK(apply_move(k3, edge_set_of(k3, {1}), 0) == edge_set_of(k3, {1}));
  // involution
  EdgeSet c = edge_set_of(k3, {0, 2});
  CHECK(apply_move(k3, apply_move(k3, c, 0), 0) == c);
  CHECK_THROWS_AS(apply_move(k3, c, 9), EdgeOutOfRange);
}

TEST_CASE("apply_move on a path") {
  Graph p3 = path_graph(3);
  // config {(0,1)}: E((0,1)) = {(1,2)}
  CHECK(apply_move(p3, edge_set_of(p3, {0}), 0) == edge_set_of(p3, {0, 1}));
}

TEST_CASE("generator matrix agrees with apply_move on every configuration") {
  for (const auto& [name, g] : builtin_corpus()) {
    if (g.m() > 10) continue;
    for (int e = 0; e < g.m(); ++e) {
      GroupElement rho = generator(g, e);
      CHECK(compose(rho, rho).is_identity());
      for (unsigned mask = 0; mask < (1u << g.m()); ++mask) {
        EdgeSet cfg = config_of_mask(g.m(), mask);
        CHECK(rho.apply(cfg) == apply_move(g, cfg, e));
      }
    }
  }
}

TEST_CASE("moves are linear") {
  Graph g = paw_graph();
  for (int e = 0; e < g.m(); ++e)
    for (unsigned a = 0; a < (1u << g.m()); ++a)
      for (unsigned b = 0; b < (1u << g.m()); ++b) {
        EdgeSet ga = config_of_mask(g.m(), a);
        EdgeSet gb = config_of_mask(g.m(), b);
        CHECK((apply_move(g, ga ^ gb, e) ^ apply_move(g, ga, e) ^
               apply_move(g, gb, e))
                  .none());
      }
}

TEST_CASE("cosets are invariant along move sequences") {
  std::mt19937 rng(11);
  for (const auto& [name, g] : builtin_corpus()) {
    SpanningTree t = spanning_tree(g);
    CosetSolver cs(g, t);
    for (int trial = 0; trial < 10; ++trial) {
      EdgeSet cfg = config_of_mask(g.m(), rng() & ((1u << g.m()) - 1));
      EdgeSet rep = cs.representative(cfg);
      for (int mv : random_word(rng, g.m(), 12)) {
        cfg = apply_move(g, cfg, mv);
        CHECK(cs.representative(cfg) == rep);
      }
    }
  }
}

TEST_CASE("word evaluation matches stepwise application") {
  std::mt19937 rng(3);
  for (const auto& [name, g] : builtin_corpus()) {
    for (int trial = 0; trial < 10; ++trial) {
      MoveSequence w = random_word(rng, g.m(), 8);
      GroupElement elem = element_of_word(g, w);
      EdgeSet cfg = config_of_mask(g.m(), rng() & ((1u << g.m()) - 1));
      EdgeSet expect = cfg;
      for (int mv : w) expect = apply_move(g, expect, mv);
      CHECK(elem.apply(cfg) == expect);
    }
  }
  Graph k3 = complete_graph(3);
  CHECK(element_of_word(k3, {}).is_identity());
  CHECK(element_of_word(k3, {1, 1}).is_identity());
  CHECK(element_of_word(k3, {0}).apply(edge_set_of(k3, {0})) ==
        edge_set_of(k3, {0, 1, 2}));
}

TEST_CASE("compose basics") {
  Graph k3 = complete_graph(3);
  GroupElement id = identity_element(k3.m());
  GroupElement rho = generator(k3, 1);
  CHECK(compose(id, rho) == rho);
  CHECK(compose(rho, rho) == id);
}

TEST_CASE("alpha maps a generator to the endpoint transposition") {
  for (const auto& [name, g] : builtin_corpus()) {
    if (g.n < 3) continue;
    for (int e = 0; e < g.m(); ++e) {
      auto [x, y] = g.edges[e];
      CHECK(alpha(g, generator(g, e)) == transposition(g.n, x, y));
    }
  }
}

TEST_CASE("alpha examples and homomorphism") {
  Graph k3 = complete_graph(3);
  CHECK(alpha(k3, identity_element(k3.m())).is_identity());
  // rho_e0 rho_e1 (left-to-right word [e1, e0]): (01) after (02) = 3-cycle
  Permutation p = alpha(k3, compose(generator(k3, 0), generator(k3, 1)));
  CHECK(p == compose(transposition(3, 0, 1), transposition(3, 0, 2)));

  std::mt19937 rng(5);
  for (const auto& [name, g] : builtin_corpus()) {
    if (g.n < 3) continue;
    for (int trial = 0; trial < 8; ++trial) {
      GroupElement a = element_of_word(g, random_word(rng, g.m(), 6));
      GroupElement b = element_of_word(g, random_word(rng, g.m(), 6));
      CHECK(alpha(g, compose(a, b)) == compose(alpha(g, a), alpha(g, b)));
    }
  }
}

TEST_CASE("alpha rejects small degree") {
  CHECK_THROWS_AS(alpha(path_graph(2), identity_element(1)), DegreeTooSmall);
}

TEST_CASE("transposition words along the tree path") {
  Graph p3 = path_graph(3);
  SpanningTree t = spanning_tree(p3);
  CHECK(word_for_transposition(p3, t, 0, 2) == MoveSequence{1, 0, 1});
  CHECK(word_for_transposition(p3, t, 0, 1) == MoveSequence{0});

  Graph k3 = complete_graph(3);
  SpanningTree tk = spanning_tree(k3);  // {(0,1),(0,2)}
  MoveSequence w = word_for_transposition(k3, tk, 1, 2);
  CHECK(w == MoveSequence{1, 0, 1});
  CHECK(alpha(k3, element_of_word(k3, w)) == transposition(3, 1, 2));

  CHECK_THROWS_AS(word_for_transposition(k3, tk, 1, 1), SameVertex);
}

TEST_CASE("transposition words have odd length and order-2 image") {
  for (const auto& [name, g] : builtin_corpus()) {
    if (g.n < 3) continue;
    SpanningTree t = spanning_tree(g);
    for (int u = 0; u < g.n; ++u)
      for (int v = 0; v < g.n; ++v) {
        if (u == v) continue;
        MoveSequence w = word_for_transposition(g, t, u, v);
        CHECK(w.size() % 2 == 1);
        CHECK(alpha(g, element_of_word(g, w)) == transposition(g.n, u, v));
      }
  }
}

TEST_CASE("generated subgroup orders") {
  Graph k3 = complete_graph(3);
  CHECK(generate_subgroup(k3, all_edge_indices(k3)).size() == 24);
  CHECK(generate_subgroup(k3, {0}).size() == 2);

  Graph p3 = path_graph(3);
  CHECK(generate_subgroup(p3, all_edge_indices(p3)).size() == 6);

  CHECK_THROWS_AS(generate_subgroup(k3, all_edge_indices(k3), 10), CapExceeded);
}

TEST_CASE("tree graphs generate the symmetric group") {
  for (int n = 3; n <= 6; ++n) {
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(generate_subgroup(path_graph(n), all_edge_indices(path_graph(n))).size() ==
          fact);
    CHECK(generate_subgroup(star_graph(n), all_edge_indices(star_graph(n))).size() ==
          fact);
  }
}

TEST_CASE("alpha image of the tree-edge subgroup is all of S_n") {
  for (const auto& [name, g] : builtin_corpus()) {
    if (g.n < 3 || g.n > 6) continue;
    SpanningTree t = spanning_tree(g);
    auto sub = generate_subgroup(g, t.tree_edges);
    std::set<Permutation> perms;
    for (const auto& elem : sub) perms.insert(alpha(g, elem));
    std::size_t fact = 1;
    for (int i = 2; i <= g.n; ++i) fact *= i;
    CHECK(perms.size() == fact);
  }
}
