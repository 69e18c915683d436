#pragma once
// k shortest loopless paths, plain and accelerated.
//
// yen_ksp is the classic spur-node scheme: each accepted path spawns
// candidates by banning, at every prefix, the edges that previous equal-prefix
// paths took next, plus the prefix nodes themselves.  Paths are identified by
// their node sequence; candidates are kept in a set ordered by (cost,
// sequence), which both deduplicates and makes tie order deterministic.
//
// The accelerated variant first partitions the graph into reciprocal-pointer
// chains and ranks their routes by cost.  The chains of the j cheapest routes
// (plus s and t) induce a subgraph that provably contains every s -> t path
// cheaper than route j+1, so Yen can run on the small subgraph.  Starting at
// j = k, the result is accepted once the k-th found cost is strictly below
// the (j+1)-th route cost (or the whole graph is in play); otherwise j
// doubles and the reduction is rebuilt.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cvp/graph.hpp"
#include "cvp/partition.hpp"
#include "cvp/ranking.hpp"
#include "cvp/spt.hpp"

namespace cvp {

namespace ksp_detail {

// Point-to-point Dijkstra honouring node/edge bans, deterministic tie order,
// early exit at the destination.  Bans are per node pair: once a previous
// path left u toward v, every parallel u -> v edge is off the table, which is
// exactly right when paths are node sequences.
struct FilteredResult {
  std::vector<NodeId> nodes;
  double cost = kInfCost;
};

inline FilteredResult shortest_filtered(const Graph& g, NodeId s, NodeId t,
                                        const std::vector<bool>& node_banned,
                                        const std::set<std::pair<NodeId, NodeId>>& edge_banned) {
  const std::size_t n = g.node_count();
  std::vector<double> dist(n, kInfCost);
  std::vector<NodeId> parent(n, kNoNode);
  std::vector<bool> settled(n, false);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;

  FilteredResult res;
  if (node_banned[s] || node_banned[t]) return res;
  dist[s] = 0.0;
  heap.push({0.0, s});
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (settled[u] || du > dist[u]) continue;
    settled[u] = true;
    if (u == t) break;
    for (EdgeId eid : g.out_edges(u)) {
      const Edge& e = g.edge(eid);
      if (node_banned[e.to] || edge_banned.count({u, e.to})) continue;
      double offer = du + e.cost;
      if (offer < dist[e.to]) {
        dist[e.to] = offer;
        parent[e.to] = u;
        heap.push({offer, e.to});
      }
    }
  }
  if (dist[t] == kInfCost) return res;
  res.cost = dist[t];
  for (NodeId x = t; x != kNoNode; x = parent[x]) res.nodes.push_back(x);
  std::reverse(res.nodes.begin(), res.nodes.end());
  return res;
}

inline double prefix_cost(const Graph& g, const std::vector<NodeId>& nodes, std::size_t upto) {
  double c = 0.0;
  for (std::size_t i = 0; i + 1 <= upto; ++i) c += g.min_edge_cost(nodes[i], nodes[i + 1]);
  return c;
}

}  // namespace ksp_detail

// Up to k cheapest simple s -> t paths, cost-ascending, equal costs ordered
// by lexicographic node sequence.  Empty when t is unreachable.
inline std::vector<ExplicitPath> yen_ksp(const Graph& g, NodeId s, NodeId t, std::size_t k) {
  if (s >= g.node_count() || t >= g.node_count())
    throw std::invalid_argument("endpoint out of range");
  std::vector<ExplicitPath> accepted;
  if (k == 0) return accepted;

  std::vector<bool> no_bans(g.node_count(), false);
  ksp_detail::FilteredResult first = ksp_detail::shortest_filtered(g, s, t, no_bans, {});
  if (first.nodes.empty()) return accepted;
  accepted.push_back({first.nodes, first.cost});

  // Candidates ordered by (cost, node sequence); the set deduplicates.
  std::set<std::pair<double, std::vector<NodeId>>> candidates;

  while (accepted.size() < k) {
    const std::vector<NodeId>& last = accepted.back().nodes;
    for (std::size_t spur = 0; spur + 1 < last.size(); ++spur) {
      std::vector<NodeId> root(last.begin(), last.begin() + spur + 1);

      std::set<std::pair<NodeId, NodeId>> edge_banned;
      for (const ExplicitPath& p : accepted)
        if (p.nodes.size() > spur + 1 &&
            std::equal(root.begin(), root.end(), p.nodes.begin()))
          edge_banned.insert({p.nodes[spur], p.nodes[spur + 1]});

      std::vector<bool> node_banned(g.node_count(), false);
      for (std::size_t i = 0; i < spur; ++i) node_banned[root[i]] = true;

      ksp_detail::FilteredResult spur_path =
          ksp_detail::shortest_filtered(g, last[spur], t, node_banned, edge_banned);
      if (spur_path.nodes.empty()) continue;

      std::vector<NodeId> total = root;
      total.insert(total.end(), spur_path.nodes.begin() + 1, spur_path.nodes.end());
      double total_cost = ksp_detail::prefix_cost(g, last, spur) + spur_path.cost;
      candidates.insert({total_cost, std::move(total)});
    }
    if (candidates.empty()) break;
    auto best = candidates.begin();
    accepted.push_back({best->second, best->first});
    candidates.erase(best);
  }
  return accepted;
}

// Subgraph induced by the chains of the j cheapest route records plus both
// endpoints.  Node ids are remapped densely in ascending original order.
struct ReducedGraph {
  Graph graph;
  std::vector<NodeId> to_original;              // reduced id -> original id
  std::vector<NodeId> from_original;            // original id -> reduced id or kNoNode
  std::size_t chains_used = 0;
};

inline ReducedGraph build_reduced_graph(const Graph& g,
                                        const std::vector<CvpRecord>& records_by_cost,
                                        const Partition& partition, NodeId s, NodeId t,
                                        std::size_t j) {
  if (j < 1 || j > records_by_cost.size())
    throw std::invalid_argument("chain budget out of range");
  for (std::size_t i = 1; i < records_by_cost.size(); ++i)
    if (records_by_cost[i - 1].cost > records_by_cost[i].cost)
      throw std::invalid_argument("records are not cost-ascending");

  std::vector<bool> keep(g.node_count(), false);
  keep[s] = keep[t] = true;
  for (std::size_t i = 0; i < j; ++i)
    for (NodeId v : partition.chains[records_by_cost[i].chain_index].nodes) keep[v] = true;

  ReducedGraph red;
  red.chains_used = j;
  red.from_original.assign(g.node_count(), kNoNode);
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (keep[v]) {
      red.from_original[v] = static_cast<NodeId>(red.to_original.size());
      red.to_original.push_back(v);
    }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (keep[e.from] && keep[e.to])
      edges.push_back({red.from_original[e.from], red.from_original[e.to], e.cost, e.category});
  red.graph = Graph(red.to_original.size(), std::move(edges));
  return red;
}

// The workspace accelerated_ksp builds once and reuses across escalations.
struct KspReductionPlan {
  ShortestPathTree beta, phi;
  Partition partition;
  std::vector<CvpRecord> records_by_cost;
};

inline KspReductionPlan make_ksp_reduction_plan(const Graph& g, NodeId s, NodeId t) {
  KspReductionPlan plan;
  plan.beta = compute_spt(g, s, Orientation::predecessor);
  plan.phi = compute_spt(g, t, Orientation::successor);
  plan.partition = partition_rpc(plan.beta, plan.phi, s, t);
  plan.records_by_cost =
      rank(score_chains(plan.partition, plan.beta, plan.phi), Measure::cost,
           plan.partition.size());
  return plan;
}

// Same cost sequence as yen_ksp(g, s, t, k), computed on the reduced graph.
// Acceptance requires the k-th found cost to be strictly below the next
// unused route's cost; equality escalates, so ties never slip through.
inline std::vector<ExplicitPath> accelerated_ksp(const Graph& g, NodeId s, NodeId t,
                                                 std::size_t k,
                                                 const KspReductionPlan* prebuilt = nullptr) {
  if (k == 0) return {};
  KspReductionPlan local;
  if (prebuilt == nullptr) local = make_ksp_reduction_plan(g, s, t);
  const KspReductionPlan& plan = prebuilt ? *prebuilt : local;
  if (!plan.phi.reachable(s)) return {};  // t unreachable from s

  const std::size_t total = plan.partition.size();
  std::size_t j = std::min(k, total);
  while (true) {
    ReducedGraph red = build_reduced_graph(g, plan.records_by_cost, plan.partition, s, t, j);
    std::vector<ExplicitPath> found =
        yen_ksp(red.graph, red.from_original[s], red.from_original[t], k);
    for (ExplicitPath& p : found)
      for (NodeId& v : p.nodes) v = red.to_original[v];

    bool exhausted = j >= total;
    bool proven = found.size() == k && !exhausted &&
                  found.back().cost < plan.records_by_cost[j].cost;
    if (exhausted || proven) return found;
    j = std::min(j * 2, total);
  }
}

}  // namespace cvp
