#pragma once
// Partitioning the node set into chains of reciprocal pointers.
//
// Given the predecessor tree rooted at s (back pointers beta) and the
// successor tree rooted at t (forward pointers phi), the pair (u, v) is a
// reciprocal pointer when beta(v) = u and phi(u) = v.  Reciprocal pointers
// compose into node-disjoint chains; every node belongs to exactly one
// maximal chain, so the chains partition V and there are at most |V| of
// them.  Each chain, completed with the tree walks to s and t, names one
// candidate s -> t route, so the whole candidate set enumerates in O(|V|).
//
// Three constructions are provided:
//
//   partition_rpc               the direct chain-growing sweep; its result is
//                               independent of the outer visit order.
//   partition_via_components    connected components of the reciprocal-pair
//                               graph; provably the same partition, kept as a
//                               cross-check.
//   partition_disjoint_plateau  an older heuristic that grows runs of
//                               graph-adjacent nodes with equal via-cost,
//                               claiming nodes first-come-first-served.  Its
//                               output depends on the visit order and can
//                               fuse or drop chains; it exists to demonstrate
//                               that defect, not for production use.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cvp/graph.hpp"
#include "cvp/spt.hpp"

namespace cvp {

struct RpcChain {
  std::vector<NodeId> nodes;  // ordered head (nearest s) to tail (nearest t)
};

struct Partition {
  std::vector<RpcChain> chains;
  std::vector<std::int32_t> chain_of;  // node id -> index into chains

  std::size_t size() const { return chains.size(); }
};

namespace detail {

inline void check_trees(const ShortestPathTree& beta, const ShortestPathTree& phi) {
  if (beta.orientation != Orientation::predecessor)
    throw std::invalid_argument("first tree must be predecessor-oriented");
  if (phi.orientation != Orientation::successor)
    throw std::invalid_argument("second tree must be successor-oriented");
  if (beta.parent.size() != phi.parent.size())
    throw std::invalid_argument("trees disagree on node count");
}

inline std::vector<NodeId> default_visit_order(std::size_t n) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  return order;
}

inline void check_permutation(const std::vector<NodeId>& order, std::size_t n) {
  if (order.size() != n) throw std::invalid_argument("visit order is not a permutation");
  std::vector<bool> seen(n, false);
  for (NodeId v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("visit order is not a permutation");
    seen[v] = true;
  }
}

inline Partition finalize(std::vector<RpcChain> chains, std::size_t n) {
  Partition p;
  p.chains = std::move(chains);
  p.chain_of.assign(n, -1);
  for (std::size_t i = 0; i < p.chains.size(); ++i)
    for (NodeId v : p.chains[i].nodes) p.chain_of[v] = static_cast<std::int32_t>(i);
  return p;
}

}  // namespace detail

// Reciprocal test: is (u, v) linked by mutual tree pointers?
inline bool reciprocal(const ShortestPathTree& beta, const ShortestPathTree& phi, NodeId u,
                       NodeId v) {
  return u != kNoNode && v != kNoNode && beta.parent[v] == u && phi.parent[u] == v;
}

// Grows each chain from a seed in both directions along reciprocal pointers.
// The guards mirror the tree roots: the backward walk stops at s, the
// forward walk stops at t.  Because maximal chains are claimed whole, the
// chain set does not depend on visit_order (only the listing order does).
inline Partition partition_rpc(const ShortestPathTree& beta, const ShortestPathTree& phi,
                               NodeId s, NodeId t, const std::vector<NodeId>& visit_order) {
  detail::check_trees(beta, phi);
  const std::size_t n = beta.parent.size();
  detail::check_permutation(visit_order, n);

  std::vector<bool> visited(n, false);
  std::vector<RpcChain> chains;
  std::vector<NodeId> backward;  // scratch for the head-side walk

  for (NodeId seed : visit_order) {
    if (visited[seed]) continue;
    visited[seed] = true;

    backward.clear();
    NodeId x = seed;
    while (x != s && reciprocal(beta, phi, beta.parent[x], x)) {
      x = beta.parent[x];
      visited[x] = true;
      backward.push_back(x);
    }

    RpcChain chain;
    chain.nodes.assign(backward.rbegin(), backward.rend());
    chain.nodes.push_back(seed);

    x = seed;
    while (x != t && reciprocal(beta, phi, x, phi.parent[x])) {
      x = phi.parent[x];
      visited[x] = true;
      chain.nodes.push_back(x);
    }
    chains.push_back(std::move(chain));
  }
  return detail::finalize(std::move(chains), n);
}

inline Partition partition_rpc(const ShortestPathTree& beta, const ShortestPathTree& phi,
                               NodeId s, NodeId t) {
  return partition_rpc(beta, phi, s, t, detail::default_visit_order(beta.parent.size()));
}

// Same partition via connected components of the reciprocal-pair relation
// { (u, v) : beta(v) = u and phi(u) = v }.  Each component is a simple chain;
// nodes are emitted head to tail and chains in ascending head id.
inline Partition partition_via_components(const ShortestPathTree& beta,
                                          const ShortestPathTree& phi, NodeId /*s*/,
                                          NodeId /*t*/) {
  detail::check_trees(beta, phi);
  const std::size_t n = beta.parent.size();

  std::vector<NodeId> next(n, kNoNode), prev(n, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    NodeId u = beta.parent[v];
    if (u != kNoNode && phi.parent[u] == v) {  // reciprocal pair (u, v)
      next[u] = v;
      prev[v] = u;
    }
  }

  std::vector<RpcChain> chains;
  for (NodeId v = 0; v < n; ++v) {
    if (prev[v] != kNoNode) continue;  // not a chain head
    RpcChain chain;
    for (NodeId x = v; x != kNoNode; x = next[x]) chain.nodes.push_back(x);
    chains.push_back(std::move(chain));
  }
  return detail::finalize(std::move(chains), n);
}

// Order-sensitive plateau sweep.  From each unclaimed seed it extends
// backward over in-neighbours and forward over out-neighbours that are still
// unvisited and share the seed's via-cost, preferring the nearest neighbour
// by tree distance (largest dist_s backward, largest dist_t forward; ties to
// the lower id).  Nodes claimed by an earlier chain are unavailable, so the
// result depends on visit_order — the defect this variant demonstrates.
inline Partition partition_disjoint_plateau(const Graph& g, const ShortestPathTree& beta,
                                            const ShortestPathTree& phi, NodeId s, NodeId t,
                                            const std::vector<double>& via,
                                            const std::vector<NodeId>& visit_order) {
  detail::check_trees(beta, phi);
  const std::size_t n = beta.parent.size();
  if (g.node_count() != n) throw std::invalid_argument("graph does not match trees");
  if (via.size() != n) throw std::invalid_argument("via-cost table does not match trees");
  detail::check_permutation(visit_order, n);

  std::vector<bool> visited(n, false);
  std::vector<RpcChain> chains;
  std::vector<NodeId> backward;

  auto step_back = [&](NodeId x) -> NodeId {  // best unvisited equal-cost in-neighbour
    NodeId best = kNoNode;
    for (EdgeId eid : g.in_edges(x)) {
      NodeId w = g.edge(eid).from;
      if (visited[w] || via[w] != via[x] || via[w] == kInfCost) continue;
      if (best == kNoNode || beta.dist[w] > beta.dist[best] ||
          (beta.dist[w] == beta.dist[best] && w < best))
        best = w;
    }
    return best;
  };
  auto step_forward = [&](NodeId x) -> NodeId {
    NodeId best = kNoNode;
    for (EdgeId eid : g.out_edges(x)) {
      NodeId y = g.edge(eid).to;
      if (visited[y] || via[y] != via[x] || via[y] == kInfCost) continue;
      if (best == kNoNode || phi.dist[y] > phi.dist[best] ||
          (phi.dist[y] == phi.dist[best] && y < best))
        best = y;
    }
    return best;
  };

  for (NodeId seed : visit_order) {
    if (visited[seed]) continue;
    visited[seed] = true;

    backward.clear();
    for (NodeId x = seed; x != s;) {
      NodeId w = step_back(x);
      if (w == kNoNode) break;
      visited[w] = true;
      backward.push_back(w);
      x = w;
    }

    RpcChain chain;
    chain.nodes.assign(backward.rbegin(), backward.rend());
    chain.nodes.push_back(seed);

    for (NodeId x = seed; x != t;) {
      NodeId y = step_forward(x);
      if (y == kNoNode) break;
      visited[y] = true;
      chain.nodes.push_back(y);
      x = y;
    }
    chains.push_back(std::move(chain));
  }
  return detail::finalize(std::move(chains), n);
}

// Comparable form: chains as sorted vectors, sorted lexicographically.
inline std::vector<std::vector<NodeId>> chain_set(const Partition& p) {
  std::vector<std::vector<NodeId>> set;
  set.reserve(p.chains.size());
  for (const RpcChain& c : p.chains) {
    std::vector<NodeId> nodes = c.nodes;
    std::sort(nodes.begin(), nodes.end());
    set.push_back(std::move(nodes));
  }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace cvp
