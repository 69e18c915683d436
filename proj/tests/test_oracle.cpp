#include <catch2/catch_amalgamated.hpp>

#include "cvp/oracle.hpp"
#include "cvp/spt.hpp"
#include "fixtures.hpp"

using namespace cvp;
using namespace fixtures;

namespace {

Graph diamond() { return Graph(4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}}); }

Graph complete4() {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = 0; v < 4; ++v)
      if (u != v) edges.push_back({u, v, 1.0});
  return Graph(4, std::move(edges));
}

}  // namespace

TEST_CASE("simple path enumeration on small graphs") {
  auto paths = enumerate_simple_paths(diamond(), 0, 3);
  REQUIRE(paths == std::vector<std::vector<NodeId>>{{0, 1, 3}, {0, 2, 3}});

  // complete digraph on 4 nodes: {}, {1}, {2}, {1,2}, {2,1} as interiors
  REQUIRE(enumerate_simple_paths(complete4(), 0, 3).size() == 5);

  // a path may not revisit, so a 2-cycle contributes nothing extra
  Graph g = loop_graph();
  REQUIRE(enumerate_simple_paths(g, 0, 3) ==
          std::vector<std::vector<NodeId>>{{0, 1, 3}});

  REQUIRE(enumerate_simple_paths(g, 0, 0) == std::vector<std::vector<NodeId>>{{0}});
  REQUIRE(enumerate_simple_paths(g, 3, 0).empty());
}

TEST_CASE("parallel edges collapse to one neighbour") {
  Graph g(2, {{0, 1, 5.0}, {0, 1, 2.0}});
  REQUIRE(enumerate_simple_paths(g, 0, 1) == std::vector<std::vector<NodeId>>{{0, 1}});
  auto ksp = brute_force_ksp(g, 0, 1, 5);
  REQUIRE(ksp.size() == 1);
  REQUIRE(ksp[0].cost == 2.0);  // cheapest parallel edge prices the hop
}

TEST_CASE("budgets are hard limits, not truncation") {
  EnumerationBudget tiny;
  tiny.max_nodes = 3;
  REQUIRE_THROWS_AS(enumerate_simple_paths(complete4(), 0, 3, tiny), OracleBudgetError);

  EnumerationBudget few_paths;
  few_paths.max_paths = 3;
  REQUIRE_THROWS_AS(enumerate_simple_paths(complete4(), 0, 3, few_paths), OracleBudgetError);

  EnumerationBudget shallow;
  shallow.max_hops = 1;
  auto paths = enumerate_simple_paths(complete4(), 0, 3, shallow);
  REQUIRE(paths == std::vector<std::vector<NodeId>>{{0, 3}});

  REQUIRE_THROWS_AS(enumerate_simple_paths(diamond(), 0, 7), std::invalid_argument);
}

TEST_CASE("exhaustive route costs through every node match the tree sums") {
  Graph g = golden_graph();
  auto beta = compute_spt(g, S, Orientation::predecessor);
  auto phi = compute_spt(g, T, Orientation::successor);
  EnumerationBudget budget;
  budget.max_nodes = 14;
  for (NodeId v = 0; v < g.node_count(); ++v)
    REQUIRE(brute_force_via_cost(g, S, T, v, budget) == via_cost(beta, phi, v));
}

TEST_CASE("exhaustive k cheapest routes on the golden graph") {
  EnumerationBudget budget;
  budget.max_nodes = 14;
  auto best = brute_force_ksp(golden_graph(), S, T, 3, budget);
  REQUIRE(best.size() == 3);
  REQUIRE(best[0].cost == 11.0);
  REQUIRE(best[1].cost == 11.0);
  REQUIRE(best[2].cost == 12.0);
  REQUIRE(best[0].nodes == std::vector<NodeId>{S, D, G, J, T});
  REQUIRE(best[1].nodes == std::vector<NodeId>{S, D, H, J, T});
  REQUIRE(best[2].nodes == std::vector<NodeId>{S, D, E, H, J, T});
}

TEST_CASE("maximal equal-cost runs on the golden graph") {
  Graph g = golden_graph();
  auto beta = compute_spt(g, S, Orientation::predecessor);
  auto phi = compute_spt(g, T, Orientation::successor);
  EnumerationBudget budget;
  budget.max_nodes = 14;
  auto plateaus = enumerate_maximal_plateaus(g, via_costs(beta, phi), budget);
  REQUIRE(plateaus == std::vector<std::vector<NodeId>>{
                          {S, D, G, H, J, T}, {C, F, I, L}, {E, K, M}, {B}});
}

TEST_CASE("unreachable nodes never join a plateau") {
  Graph g(3, {{0, 1, 1.0}});  // node 2 isolated
  std::vector<double> via = {2.0, 2.0, kInfCost};
  auto plateaus = enumerate_maximal_plateaus(g, via);
  REQUIRE(plateaus == std::vector<std::vector<NodeId>>{{0, 1}});
  std::vector<double> bad(2, 0.0);
  REQUIRE_THROWS_AS(enumerate_maximal_plateaus(g, bad), std::invalid_argument);
}
