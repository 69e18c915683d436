#pragma once
// Shortest-path trees in two orientations:
//
//   predecessor  parent pointers lead back toward the source root; built by
//                Dijkstra over the out-adjacency.
//   successor    parent pointers lead forward toward the target root; built
//                by the same algorithm over the in-adjacency, which is
//                equivalent to running on the transposed graph.
//
// Determinism: the heap orders by (dist, node id), so among equal keys the
// lower id settles first.  Two tie policies control which of several equally
// good parents survives:
//
//   keep_first     a parent is replaced only by a strictly smaller distance.
//   take_last      an offer equal to the current tentative distance replaces
//                  the parent as long as the node is still unsettled; the
//                  latest equal offer wins.  Parents still always settle
//                  before their children, so the tree stays acyclic even
//                  with zero-weight edges.
//
// The defaults (keep_first for predecessor, take_last for successor) make the
// two trees of a query resolve their equal-cost choices in opposite scan
// directions, which maximizes pointer reciprocity between them on plateau-rich
// graphs and pins every parent array byte-for-byte.

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "cvp/graph.hpp"

namespace cvp {

enum class Orientation { predecessor, successor };
enum class TiePolicy { keep_first, take_last };

constexpr TiePolicy default_tie_policy(Orientation o) {
  return o == Orientation::predecessor ? TiePolicy::keep_first : TiePolicy::take_last;
}

struct ShortestPathTree {
  Orientation orientation = Orientation::predecessor;
  NodeId root = kNoNode;
  std::vector<NodeId> parent;    // kNoNode at the root and at unreachable nodes
  std::vector<double> dist;      // +infinity when unreachable
  std::vector<std::int32_t> hops;  // edge count of the tree path; -1 when unreachable

  bool reachable(NodeId v) const { return dist[v] < kInfCost; }
};

// Dijkstra with a binary heap and lazy deletion.  For the successor
// orientation the relaxation scans in_edges, so dist[v] is the cost of the
// cheapest path v -> root and parent[v] is the next node on it.
inline ShortestPathTree compute_spt(const Graph& g, NodeId root, Orientation orientation,
                                    TiePolicy policy) {
  if (root >= g.node_count()) throw GraphError("spt root out of range");
  const std::size_t n = g.node_count();
  ShortestPathTree t;
  t.orientation = orientation;
  t.root = root;
  t.parent.assign(n, kNoNode);
  t.dist.assign(n, kInfCost);
  t.hops.assign(n, -1);

  using HeapItem = std::pair<double, NodeId>;  // (dist, id): lower id pops first on ties
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
  std::vector<bool> settled(n, false);

  t.dist[root] = 0.0;
  t.hops[root] = 0;
  heap.push({0.0, root});

  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (settled[u] || du > t.dist[u]) continue;
    settled[u] = true;
    auto arcs = orientation == Orientation::predecessor ? g.out_edges(u) : g.in_edges(u);
    for (EdgeId eid : arcs) {
      const Edge& e = g.edge(eid);
      NodeId v = orientation == Orientation::predecessor ? e.to : e.from;
      double offer = du + e.cost;
      if (offer < t.dist[v]) {
        t.dist[v] = offer;
        t.parent[v] = u;
        t.hops[v] = t.hops[u] + 1;
        heap.push({offer, v});
      } else if (policy == TiePolicy::take_last && !settled[v] && offer == t.dist[v]) {
        t.parent[v] = u;
        t.hops[v] = t.hops[u] + 1;
      }
    }
  }
  return t;
}

inline ShortestPathTree compute_spt(const Graph& g, NodeId root, Orientation orientation) {
  return compute_spt(g, root, orientation, default_tie_policy(orientation));
}

// Cost of the cheapest s -> v -> t path: dist_s[v] + dist_t[v].
inline double via_cost(const ShortestPathTree& pred, const ShortestPathTree& succ, NodeId v) {
  return pred.dist[v] + succ.dist[v];
}

inline std::vector<double> via_costs(const ShortestPathTree& pred,
                                     const ShortestPathTree& succ) {
  std::vector<double> c(pred.dist.size());
  for (std::size_t v = 0; v < c.size(); ++v)
    c[v] = pred.dist[v] + succ.dist[v];
  return c;
}

}  // namespace cvp
