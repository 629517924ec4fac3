// Command-line surface for the edge-flipping puzzle library.
//
// Exit codes: 0 success, 1 usage/input error, 2 unsolvable (solve),
// 3 cap exceeded, 4 invariant violation (selfcheck/verify failure).

#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgeflip/edgeflip.hpp"

namespace {

using namespace edgeflip;
using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(v);
  return v.str();
}

json descriptor_to_json(const Graph& g, const OrbitDescriptor& d) {
  return json{{"coset_rep", edge_set_to_json(g, d.coset_rep)},
              {"class", d.label()}};
}

void emit(const json& j, bool human) {
  if (human)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

int cmd_classify(const std::string& graph_path, const std::string& config_str,
                 bool human) {
  Graph g = load_graph(graph_path);
  OrbitContext ctx(g);
  EdgeSet config = parse_edge_set(g, config_str);
  OrbitDescriptor d = ctx.classify(config);
  json out = descriptor_to_json(g, d);
  out["orbit_size"] = big_to_json(orbit_size(g, d));
  emit(out, human);
  return 0;
}

int cmd_solve(const std::string& graph_path, const std::string& from_str,
              const std::string& to_str, std::size_t cap, bool human) {
  Graph g = load_graph(graph_path);
  EdgeSet from = parse_edge_set(g, from_str);
  EdgeSet to = parse_edge_set(g, to_str);
  SolveResult r = solve(g, from, to, cap);
  switch (r.status) {
    case SolveResult::Status::Solved: {
      emit(json{{"solvable", true},
                {"moves", format_move_sequence(g, r.moves)},
                {"length", r.moves.size()}},
           human);
      return 0;
    }
    case SolveResult::Status::Unsolvable: {
      emit(json{{"solvable", false},
                {"certificate", json{{"from", descriptor_to_json(g, r.from_desc)},
                                     {"to", descriptor_to_json(g, r.to_desc)}}}},
           human);
      return 2;
    }
    case SolveResult::Status::CapExceeded: {
      emit(json{{"solvable", true}, {"cap_exceeded", true}}, human);
      return 3;
    }
  }
  return 1;
}

int cmd_orbits(const std::string& graph_path, std::size_t cap, bool human) {
  Graph g = load_graph(graph_path);
  if (g.n < 3) throw DegreeTooSmall("orbit census needs n >= 3");
  BigInt count = orbit_count(g);
  if (count > cap) throw CapExceeded("orbit census of " + count.str() + " orbits");
  SpanningTree t = spanning_tree(g);
  std::vector<int> cotree = cotree_edges(g, t);
  json orbits = json::array();
  BigInt total = 0;
  auto push = [&](const OrbitDescriptor& d) {
    json j = descriptor_to_json(g, d);
    BigInt sz = orbit_size(g, d);
    total += sz;
    j["size"] = big_to_json(sz);
    orbits.push_back(j);
  };
  int top = (g.n - 1) / 2 + ((g.n - 1) % 2);
  for (int i = 0; i <= top; ++i) {
    OrbitDescriptor d;
    d.coset_rep = EdgeSet(g.m());
    d.cls = OrbitClass::SimpleWeight;
    d.sw_index = i;
    push(d);
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cotree.size()); ++mask) {
    OrbitDescriptor d;
    d.coset_rep = EdgeSet(g.m());
    for (std::size_t b = 0; b < cotree.size(); ++b)
      if (mask & (std::uint64_t{1} << b)) d.coset_rep.set(cotree[b]);
    if (g.n % 2 == 1) {
      d.cls = OrbitClass::FullCoset;
      push(d);
    } else {
      d.cls = OrbitClass::EvenPart;
      push(d);
      d.cls = OrbitClass::OddPart;
      push(d);
    }
  }
  emit(json{{"orbit_count", big_to_json(count)},
            {"config_total", big_to_json(total)},
            {"orbits", orbits}},
       human);
  return 0;
}

int cmd_order(const std::string& graph_path, bool human) {
  Graph g = load_graph(graph_path);
  StructureDescriptor d = structure(g);
  emit(json{{"n", d.n},
            {"m", d.m},
            {"k", d.k},
            {"order", d.order.str()},
            {"branch", d.branch()}},
       human);
  return 0;
}

int cmd_verify(const std::string& graph_path, std::size_t cap, bool human) {
  Graph g = load_graph(graph_path);
  VerifyReport rep = verify_structure(g, cap);
  emit(json{{"group_order", rep.group_order.str()},
            {"expected_order", rep.expected_order.str()},
            {"image_size", rep.image_size},
            {"order_ok", rep.order_ok},
            {"injective_ok", rep.injective_ok},
            {"homomorphism_ok", rep.homomorphism_ok},
            {"parity_ok", rep.parity_ok},
            {"closure_ok", rep.closure_ok},
            {"passed", rep.passed()}},
       human);
  return rep.passed() ? 0 : 4;
}

int cmd_isomorphic(const std::string& graph_path, const std::string& other_path,
                   bool human) {
  Graph g1 = load_graph(graph_path);
  Graph g2 = load_graph(other_path);
  emit(json{{"isomorphic", groups_isomorphic(g1, g2)}}, human);
  return 0;
}

int cmd_pi1(int m, const std::string& attach_csv, bool human) {
  YGraphSpec spec;
  spec.m = m;
  std::istringstream in(attach_csv);
  std::string token;
  while (std::getline(in, token, ',')) spec.attachments.push_back(std::stoi(token));
  int p = pi1(spec);
  json out{{"pi1", p}};
  if (spec.m >= 3) {
    VertexGroupDescriptor d = classify_Y(spec);
    out["classification"] = d.label();
    if (d.kind != VertexGroupDescriptor::Kind::UnclassifiedByPi1)
      out["order"] = d.order().str();
  }
  emit(out, human);
  return 0;
}

int cmd_linegraph(const std::string& graph_path, bool human) {
  Graph g = load_graph(graph_path);
  emit(graph_to_json(line_graph(g)), human);
  return 0;
}

// Oracle-equivalence suite over the shipped corpus: closed-form orbit
// partition against BFS, group orders against the structure formula, and
// the gamma embedding checks.
int cmd_selfcheck(std::size_t cap, bool human) {
  json failures = json::array();
  for (const auto& [name, g] : builtin_corpus()) {
    if (g.n < 3) continue;
    if (g.m() <= 8) {
      OrbitContext ctx(g);
      std::map<OrbitDescriptor, std::size_t> closed_sizes;
      std::map<EdgeSet, OrbitDescriptor> label_of;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
        EdgeSet cfg(g.m());
        for (int b = 0; b < g.m(); ++b)
          if (mask & (std::uint64_t{1} << b)) cfg.set(b);
        OrbitDescriptor d = ctx.classify(cfg);
        closed_sizes[d]++;
        label_of.emplace(cfg, d);
      }
      // each BFS orbit must carry exactly one label, with matching size
      std::set<EdgeSet> seen;
      for (const auto& [cfg, d] : label_of) {
        if (seen.count(cfg)) continue;
        auto orbit = enumerate_orbit(g, cfg);
        for (const auto& x : orbit) {
          seen.insert(x);
          if (label_of.at(x) != d)
            failures.push_back(name + ": descriptor not orbit-invariant");
        }
        if (orbit.size() != closed_sizes.at(d) ||
            BigInt(orbit.size()) != orbit_size(g, d))
          failures.push_back(name + ": orbit size mismatch");
      }
    }
    VerifyReport rep = verify_structure(g, cap);
    if (!rep.passed()) failures.push_back(name + ": structure verification failed");
  }
  emit(json{{"checked", builtin_corpus().size()},
            {"failures", failures},
            {"passed", failures.empty()}},
       human);
  return failures.empty() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-flipping puzzle algebra"};
  app.require_subcommand(1);

  bool human = false;
  bool json_mode = false;
  app.add_flag("--human", human, "pretty output");
  app.add_flag("--json", json_mode, "compact JSON output (default)");

  std::string graph_path, other_path, config_str, from_str, to_str, attach_csv;
  std::size_t cap = 2'000'000;
  std::size_t solve_cap = 4'000'000;
  std::size_t orbits_cap = 4096;
  int y_m = 0;

  auto* classify_cmd = app.add_subcommand("classify", "orbit descriptor of a configuration");
  classify_cmd->add_option("--graph", graph_path)->required();
  classify_cmd->add_option("--config", config_str)->required();

  auto* solve_cmd = app.add_subcommand("solve", "move sequence between configurations");
  solve_cmd->add_option("--graph", graph_path)->required();
  solve_cmd->add_option("--from", from_str)->required();
  solve_cmd->add_option("--to", to_str)->required();
  solve_cmd->add_option("--cap", solve_cap);

  auto* orbits_cmd = app.add_subcommand("orbits", "full orbit census");
  orbits_cmd->add_option("--graph", graph_path)->required();
  orbits_cmd->add_option("--cap", orbits_cap);

  auto* order_cmd = app.add_subcommand("order", "group order via the structure theorem");
  order_cmd->add_option("--graph", graph_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "brute-force structure verification");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--cap", cap);

  auto* iso_cmd = app.add_subcommand("isomorphic", "group isomorphism criterion");
  iso_cmd->add_option("--graph", graph_path)->required();
  iso_cmd->add_option("--graph2", other_path)->required();

  auto* pi1_cmd = app.add_subcommand("pi1", "pi1 invariant of a Y graph");
  pi1_cmd->add_option("--m", y_m)->required();
  pi1_cmd->add_option("--attach", attach_csv)->required();

  auto* lg_cmd = app.add_subcommand("linegraph", "emit the line graph");
  lg_cmd->add_option("--graph", graph_path)->required();

  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "oracle-equivalence suite");
  selfcheck_cmd->add_option("--cap", cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(graph_path, config_str, human);
    if (solve_cmd->parsed()) return cmd_solve(graph_path, from_str, to_str, solve_cap, human);
    if (orbits_cmd->parsed()) return cmd_orbits(graph_path, orbits_cap, human);
    if (order_cmd->parsed()) return cmd_order(graph_path, human);
    if (verify_cmd->parsed()) return cmd_verify(graph_path, cap, human);
    if (iso_cmd->parsed()) return cmd_isomorphic(graph_path, other_path, human);
    if (pi1_cmd->parsed()) return cmd_pi1(y_m, attach_csv, human);
    if (lg_cmd->parsed()) return cmd_linegraph(graph_path, human);
    if (selfcheck_cmd->parsed()) return cmd_selfcheck(cap, human);
  } catch (const edgeflip::CapExceeded& e) {
    std::cerr << nlohmann::json{{"error", e.kind}, {"detail", e.what()}}.dump() << "\n";
    return 3;
  } catch (const edgeflip::Error& e) {
    std::cerr << nlohmann::json{{"error", e.kind}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "Unhandled"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}
