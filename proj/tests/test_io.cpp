#include <doctest.h>

#include "edgeflip/corpus.hpp"
#include "edgeflip/io.hpp"

using namespace edgeflip;

TEST_CASE("graph from JSON") {
  Graph g = graph_from_json(json::parse(R"({"n":3,"edges":[[1,0],[0,2],[1,2]]})"));
  CHECK(g.n == 3);
  CHECK(g.edges == complete_graph(3).edges);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":3})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":3,"edges":[[0]]})")),
                  ParseError);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,0]]})")),
                  NotSimple);
}

TEST_CASE("graph from text") {
  Graph g = graph_from_text("3 3\n0 1\n0 2\n1 2\n");
  CHECK(g.edges == complete_graph(3).edges);
  CHECK_THROWS_AS(graph_from_text(""), ParseError);
  CHECK_THROWS_AS(graph_from_text("3 2\n0 1\n"), ParseError);
}

TEST_CASE("parse_graph autodetects the format") {
  CHECK(parse_graph("  {\"n\":2,\"edges\":[[0,1]]}").edges ==
        path_graph(2).edges);
  CHECK(parse_graph("2 1\n0 1\n").edges == path_graph(2).edges);
}

TEST_CASE("graph JSON round trip") {
  for (const auto& [name, g] : builtin_corpus()) {
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);
  }
}

TEST_CASE("edge set parsing and formatting") {
  Graph k3 = complete_graph(3);
  CHECK(parse_edge_set(k3, "-").none());
  CHECK(parse_edge_set(k3, "0-1,1-2") == edge_set_of(k3, {0, 2}));
  CHECK(parse_edge_set(k3, "1-0") == edge_set_of(k3, {0}));
  // repeated pair toggles back off
  CHECK(parse_edge_set(k3, "0-1,0-1").none());
  CHECK_THROWS_AS(parse_edge_set(k3, "0-7"), EdgeOutOfRange);
  CHECK_THROWS_AS(parse_edge_set(k3, "garbage"), ParseError);

  CHECK(format_edge_set(k3, EdgeSet(k3.m())) == "-");
  CHECK(format_edge_set(k3, edge_set_of(k3, {0, 2})) == "0-1,1-2");
  for (unsigned mask = 0; mask < (1u << k3.m()); ++mask) {
    EdgeSet s(k3.m());
    for (int b = 0; b < k3.m(); ++b)
      if (mask & (1u << b)) s.set(b);
    CHECK(parse_edge_set(k3, format_edge_set(k3, s)) == s);
  }
}

TEST_CASE("edge set JSON listing") {
  Graph k3 = complete_graph(3);
  json j = edge_set_to_json(k3, edge_set_of(k3, {1}));
  CHECK(j == json::parse("[[0,2]]"));
}

TEST_CASE("move sequence parsing keeps order and repetition") {
  Graph k3 = complete_graph(3);
  CHECK(parse_move_sequence(k3, "-").empty());
  CHECK(parse_move_sequence(k3, "") .empty());
  CHECK(parse_move_sequence(k3, "1-2,0-1,1-2") == MoveSequence{2, 0, 2});
  CHECK(format_move_sequence(k3, {2, 0, 2}) == "1-2,0-1,1-2");
  CHECK(parse_move_sequence(k3, format_move_sequence(k3, {0, 0, 1})) ==
        MoveSequence{0, 0, 1});
  CHECK_THROWS_AS(parse_move_sequence(k3, "0-3"), EdgeOutOfRange);
}

TEST_CASE("load_graph reports missing files") {
  CHECK_THROWS_AS(load_graph("/nonexistent/path.json"), ParseError);
}
