#pragma once

#include <deque>
#include <unordered_map>
#include <vector>

#include "edgeflip/orbit.hpp"

namespace edgeflip {

struct SolveResult {
  enum class Status { Solved, Unsolvable, CapExceeded };
  Status status = Status::Solved;
  MoveSequence moves;             // valid when Solved
  OrbitDescriptor from_desc;      // certificate pair when Unsolvable
  OrbitDescriptor to_desc;

  bool solvable() const { return status != Status::Unsolvable; }
};

inline EdgeSet verify_sequence(const Graph& g, const EdgeSet& initial,
                               const MoveSequence& w) {
  EdgeSet cur = initial;
  for (int mv : w) cur = apply_move(g, cur, mv);
  return cur;
}

// Solvability is decided by closed-form classification; the search only
// runs on solvable pairs. Distances are symmetric because every generator
// is an involution, so a BFS from the target gives distance-to-target for
// the whole orbit; the move sequence is then rebuilt greedily, taking the
// smallest admissible edge index at each step. This yields the shortest
// solution and, among shortest ones, the lexicographically smallest.
inline SolveResult solve(const Graph& g, const EdgeSet& initial,
                         const EdgeSet& final_cfg,
                         std::size_t state_cap = 4'000'000) {
  if (g.n < 3) throw DegreeTooSmall("solve needs n >= 3");
  OrbitContext ctx(g);
  SolveResult res;
  res.from_desc = ctx.classify(initial);
  res.to_desc = ctx.classify(final_cfg);
  if (res.from_desc != res.to_desc) {
    res.status = SolveResult::Status::Unsolvable;
    return res;
  }
  if (initial == final_cfg) return res;  // empty word

  std::unordered_map<EdgeSet, int, GfVecHash> dist;
  std::deque<EdgeSet> frontier{final_cfg};
  dist.emplace(final_cfg, 0);
  bool found = false;
  while (!frontier.empty() && !found) {
    EdgeSet cur = frontier.front();
    frontier.pop_front();
    int d = dist.at(cur);
    for (int e = 0; e < g.m(); ++e) {
      EdgeSet next = apply_move(g, cur, e);
      if (dist.emplace(next, d + 1).second) {
        if (dist.size() > state_cap) {
          res.status = SolveResult::Status::CapExceeded;
          return res;
        }
        if (next == initial) found = true;
        frontier.push_back(next);
      }
    }
  }
  // initial lies in the same orbit, so it must have been reached
  EdgeSet cur = initial;
  int d = dist.at(cur);
  while (d > 0) {
    for (int e = 0; e < g.m(); ++e) {
      EdgeSet next = apply_move(g, cur, e);
      if (next == cur) continue;
      auto it = dist.find(next);
      if (it != dist.end() && it->second == d - 1) {
        res.moves.push_back(e);
        cur = next;
        d = it->second;
        break;
      }
    }
  }
  return res;
}

}  // namespace edgeflip
