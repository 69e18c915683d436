#pragma once
// Shared test graphs.
//
// The golden fixture is a 14-node, 29-arc digraph whose two shortest-path
// trees, route-cost tiers and chain partition are fully known; expected
// values are frozen here once and reused across suites.  A tiny second
// fixture exercises the route-with-a-loop corner.

#include <cstdint>
#include <random>
#include <vector>

#include "cvp/graph.hpp"

namespace fixtures {

using cvp::Edge;
using cvp::Graph;
using cvp::NodeId;

// Node labels of the golden graph, in id order.
enum : NodeId { S, B, C, D, E, F, G, H, I, J, K, L, M, T };
inline const char* kGoldenNames = "sbcdefghijklmt";

inline Graph golden_graph() {
  std::vector<Edge> edges = {
      {S, B, 3}, {S, C, 3}, {S, D, 2}, {B, D, 2}, {B, E, 3}, {C, D, 2},
      {C, F, 2}, {C, G, 4}, {D, H, 4}, {D, G, 3}, {D, E, 3}, {E, H, 2},
      {E, K, 2}, {F, G, 2}, {F, I, 2}, {G, I, 3}, {G, H, 2}, {G, J, 2},
      {H, J, 1}, {H, K, 3}, {I, J, 3}, {I, L, 3}, {J, K, 2}, {J, L, 3},
      {J, M, 3}, {J, T, 4}, {K, M, 2}, {L, T, 3}, {M, T, 3},
  };
  return Graph(14, std::move(edges));
}

// Distances from s (predecessor tree) and to t (successor tree), id order.
inline const std::vector<double> kGoldenDistFromS = {0, 3, 3, 2, 5, 5, 5, 6, 7, 7, 7, 10, 9, 11};
inline const std::vector<double> kGoldenDistToT = {11, 10, 10, 9, 7, 8, 6, 5, 6, 4, 5, 3, 3, 0};

// Parent pointers reproduced by the default tie policies, id order.
inline const std::vector<NodeId> kGoldenBetaParent = {cvp::kNoNode, S, S, S, D, C, D,
                                                      D,           F, G, E, I, K, J};
inline const std::vector<NodeId> kGoldenPhiParent = {D, E, F, G, K, I, J,
                                                     J, L, T, M, T, T, cvp::kNoNode};

// The five chains, head to tail.
inline const std::vector<std::vector<NodeId>> kGoldenChains = {
    {S, D, G, J, T}, {B}, {C, F, I, L}, {E, K, M}, {H}};

// Route cost per node id (dist-from-s + dist-to-t).
inline const std::vector<double> kGoldenViaCost = {11, 13, 13, 11, 12, 13, 11,
                                                   11, 13, 11, 12, 13, 12, 11};

// Four-node graph whose route through v revisits u: s,u,v,u,t.
inline Graph loop_graph() {
  return Graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 1, 1}, {1, 3, 1}});
}

// Random digraph: every ordered pair (u, v), u != v, gets an edge with
// probability edge_prob and an integer weight in [1, 9].
inline Graph random_graph(std::mt19937& rng, std::size_t nodes, double edge_prob = 0.4) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(1, 9);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < nodes; ++u)
    for (NodeId v = 0; v < nodes; ++v)
      if (u != v && coin(rng) < edge_prob)
        edges.push_back({u, v, static_cast<double>(weight(rng))});
  return Graph(nodes, std::move(edges));
}

}  // namespace fixtures
