#pragma once
// Exhaustive reference implementations for cross-checking the fast paths.
// Everything here enumerates; nothing shares code with the algorithms under
// test.  Budgets are hard limits: exceeding one throws instead of silently
// truncating, so a passing comparison is always a complete comparison.
// Intended for graphs of roughly a dozen nodes.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvp/graph.hpp"

namespace cvp {

struct EnumerationBudget {
  std::size_t max_nodes = 12;
  std::size_t max_hops = 64;
  std::size_t max_paths = 1000000;
};

class OracleBudgetError : public std::runtime_error {
 public:
  explicit OracleBudgetError(const std::string& what) : std::runtime_error(what) {}
};

namespace oracle_detail {

inline void check_graph(const Graph& g, const EnumerationBudget& b) {
  if (g.node_count() > b.max_nodes)
    throw OracleBudgetError("graph has " + std::to_string(g.node_count()) +
                            " nodes, budget allows " + std::to_string(b.max_nodes));
}

// Path cost counts each consecutive pair once, at the cheapest parallel edge.
inline double path_cost(const Graph& g, const std::vector<NodeId>& nodes) {
  double c = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    c += g.min_edge_cost(nodes[i], nodes[i + 1]);
  return c;
}

}  // namespace oracle_detail

// Every simple s -> t path as a node sequence, by depth-first search over
// neighbours in ascending node id.  s == t yields the single zero-length
// path [s].
inline std::vector<std::vector<NodeId>> enumerate_simple_paths(
    const Graph& g, NodeId s, NodeId t, const EnumerationBudget& budget = {}) {
  oracle_detail::check_graph(g, budget);
  if (s >= g.node_count() || t >= g.node_count())
    throw std::invalid_argument("endpoint out of range");

  std::vector<std::vector<NodeId>> paths;
  std::vector<NodeId> stack{s};
  std::vector<bool> on_path(g.node_count(), false);
  on_path[s] = true;

  auto dfs = [&](auto&& self, NodeId u) -> void {
    if (u == t) {
      if (paths.size() == budget.max_paths)
        throw OracleBudgetError("path budget " + std::to_string(budget.max_paths) + " exceeded");
      paths.push_back(stack);
      return;
    }
    if (stack.size() > budget.max_hops) return;  // deeper paths cannot stay within budget

    std::set<NodeId> targets;  // ascending, parallel edges collapsed
    for (EdgeId eid : g.out_edges(u)) targets.insert(g.edge(eid).to);
    for (NodeId v : targets) {
      if (on_path[v]) continue;
      on_path[v] = true;
      stack.push_back(v);
      self(self, v);
      stack.pop_back();
      on_path[v] = false;
    }
  };
  dfs(dfs, s);
  return paths;
}

// Cheapest s -> v -> t cost by two independent exhaustive searches; +infinity
// when either leg has no path.
inline double brute_force_via_cost(const Graph& g, NodeId s, NodeId t, NodeId v,
                                   const EnumerationBudget& budget = {}) {
  auto leg_min = [&](NodeId a, NodeId b) {
    double best = kInfCost;
    for (const std::vector<NodeId>& p : enumerate_simple_paths(g, a, b, budget))
      best = std::min(best, oracle_detail::path_cost(g, p));
    return best;
  };
  return leg_min(s, v) + leg_min(v, t);
}

// The k cheapest simple s -> t paths (fewer when fewer exist), ties ordered
// by lexicographic node sequence.
struct BruteForcePath {
  std::vector<NodeId> nodes;
  double cost = 0.0;
};

inline std::vector<BruteForcePath> brute_force_ksp(const Graph& g, NodeId s, NodeId t,
                                                   std::size_t k,
                                                   const EnumerationBudget& budget = {}) {
  std::vector<BruteForcePath> all;
  for (std::vector<NodeId>& p : enumerate_simple_paths(g, s, t, budget)) {
    double c = oracle_detail::path_cost(g, p);
    all.push_back({std::move(p), c});
  }
  std::sort(all.begin(), all.end(), [](const BruteForcePath& a, const BruteForcePath& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.nodes < b.nodes;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

// A plateau is a node sequence consecutively linked by edges whose members
// all share one finite via-cost.  Returned are the sequences whose node set
// is not strictly contained in any other plateau's node set; sorted by
// descending length then lexicographic content for determinism.
inline std::vector<std::vector<NodeId>> enumerate_maximal_plateaus(
    const Graph& g, const std::vector<double>& via, const EnumerationBudget& budget = {}) {
  oracle_detail::check_graph(g, budget);
  if (via.size() != g.node_count()) throw std::invalid_argument("via-cost table size mismatch");

  // Adjacency restricted to equal-via-cost pairs.
  std::vector<std::vector<NodeId>> next(g.node_count());
  for (const Edge& e : g.edges())
    if (via[e.from] < kInfCost && via[e.from] == via[e.to]) next[e.from].push_back(e.to);
  for (auto& lst : next) {
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
  }

  std::vector<std::vector<NodeId>> sequences;
  std::vector<NodeId> stack;
  std::vector<bool> on_path(g.node_count(), false);
  auto dfs = [&](auto&& self, NodeId u) -> void {
    if (sequences.size() == budget.max_paths)
      throw OracleBudgetError("plateau budget exceeded");
    sequences.push_back(stack);
    for (NodeId v : next[u]) {
      if (on_path[v]) continue;
      on_path[v] = true;
      stack.push_back(v);
      self(self, v);
      stack.pop_back();
      on_path[v] = false;
    }
  };
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (via[v] == kInfCost) continue;
    stack.assign(1, v);
    on_path[v] = true;
    dfs(dfs, v);
    on_path[v] = false;
  }

  // Keep sequences whose node set is maximal under strict inclusion.
  std::vector<std::set<NodeId>> sets;
  sets.reserve(sequences.size());
  for (const auto& seq : sequences) sets.emplace_back(seq.begin(), seq.end());
  std::vector<std::vector<NodeId>> maximal;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sequences.size() && !dominated; ++j)
      if (i != j && sets[i] != sets[j] &&
          std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
        dominated = true;
    if (!dominated) maximal.push_back(sequences[i]);
  }
  std::sort(maximal.begin(), maximal.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  return maximal;
}

}  // namespace cvp
