#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cvp/ksp.hpp"
#include "cvp/oracle.hpp"
#include "fixtures.hpp"

using namespace cvp;
using namespace fixtures;

namespace {

std::vector<double> costs_of(const std::vector<ExplicitPath>& paths) {
  std::vector<double> out;
  for (const ExplicitPath& p : paths) out.push_back(p.cost);
  return out;
}

bool is_simple(const std::vector<NodeId>& nodes) {
  std::set<NodeId> seen(nodes.begin(), nodes.end());
  return seen.size() == nodes.size();
}

double path_cost(const Graph& g, const std::vector<NodeId>& nodes) {
  double c = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    c += g.min_edge_cost(nodes[i], nodes[i + 1]);
  return c;
}

}  // namespace

TEST_CASE("five cheapest routes of the golden graph") {
  auto paths = yen_ksp(golden_graph(), S, T, 5);
  REQUIRE(costs_of(paths) == std::vector<double>{11, 11, 12, 12, 12});
  REQUIRE(paths[0].nodes == std::vector<NodeId>{S, D, G, J, T});
  REQUIRE(paths[1].nodes == std::vector<NodeId>{S, D, H, J, T});
  // three distinct routes share cost 12; the search emits them in the order
  // its candidate pool yields them
  REQUIRE(paths[2].nodes == std::vector<NodeId>{S, D, E, H, J, T});
  REQUIRE(paths[3].nodes == std::vector<NodeId>{S, D, E, K, M, T});
  REQUIRE(paths[4].nodes == std::vector<NodeId>{S, D, G, H, J, T});
}

TEST_CASE("ksp edge cases") {
  Graph g = golden_graph();
  REQUIRE(yen_ksp(g, S, T, 0).empty());
  REQUIRE(yen_ksp(g, T, S, 3).empty());  // nothing flows back to s
  REQUIRE_THROWS_AS(yen_ksp(g, S, 99, 1), std::invalid_argument);

  // s == t is the zero-length path, once
  auto self_paths = yen_ksp(g, S, S, 4);
  REQUIRE(self_paths.size() == 1);
  REQUIRE(self_paths[0].nodes == std::vector<NodeId>{S});
  REQUIRE(self_paths[0].cost == 0.0);

  // parallel edges are one node sequence at the cheaper price
  Graph par(2, {{0, 1, 5.0}, {0, 1, 2.0}});
  auto par_paths = yen_ksp(par, 0, 1, 3);
  REQUIRE(par_paths.size() == 1);
  REQUIRE(par_paths[0].cost == 2.0);
}

TEST_CASE("requesting more routes than exist returns them all") {
  Graph diamond(4, {{0, 1, 1}, {0, 2, 2}, {1, 3, 1}, {2, 3, 2}});
  auto paths = yen_ksp(diamond, 0, 3, 10);
  REQUIRE(costs_of(paths) == std::vector<double>{2, 4});
  REQUIRE(paths[0].nodes == std::vector<NodeId>{0, 1, 3});
  REQUIRE(paths[1].nodes == std::vector<NodeId>{0, 2, 3});
}

TEST_CASE("reduced subgraph of the two cheapest chains") {
  Graph g = golden_graph();
  KspReductionPlan plan = make_ksp_reduction_plan(g, S, T);
  REQUIRE(plan.records_by_cost.size() == 5);

  ReducedGraph red = build_reduced_graph(g, plan.records_by_cost, plan.partition, S, T, 2);
  REQUIRE(red.chains_used == 2);
  REQUIRE(red.to_original == std::vector<NodeId>{S, D, G, H, J, T});
  REQUIRE(red.graph.node_count() == 6);
  REQUIRE(red.graph.edge_count() == 7);
  REQUIRE(red.from_original[S] == 0);
  REQUIRE(red.from_original[H] == 3);
  REQUIRE(red.from_original[B] == kNoNode);

  // one chain: just the cheapest route's nodes
  ReducedGraph one = build_reduced_graph(g, plan.records_by_cost, plan.partition, S, T, 1);
  REQUIRE(one.to_original == std::vector<NodeId>{S, D, G, J, T});
  REQUIRE(one.graph.edge_count() == 4);

  REQUIRE_THROWS_AS(build_reduced_graph(g, plan.records_by_cost, plan.partition, S, T, 0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(build_reduced_graph(g, plan.records_by_cost, plan.partition, S, T, 6),
                    std::invalid_argument);
  auto shuffled = plan.records_by_cost;
  std::swap(shuffled.front(), shuffled.back());
  REQUIRE_THROWS_AS(build_reduced_graph(g, shuffled, plan.partition, S, T, 2),
                    std::invalid_argument);
}

TEST_CASE("accelerated search returns exactly the plain result") {
  Graph g = golden_graph();
  for (std::size_t k : {1, 2, 3, 4, 5, 8}) {
    auto plain = yen_ksp(g, S, T, k);
    auto fast = accelerated_ksp(g, S, T, k);
    REQUIRE(fast.size() == plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) {
      REQUIRE(fast[i].nodes == plain[i].nodes);
      REQUIRE(fast[i].cost == plain[i].cost);
    }
  }
  REQUIRE(accelerated_ksp(g, T, S, 3).empty());
  REQUIRE(accelerated_ksp(g, S, T, 0).empty());
}

TEST_CASE("a prebuilt reduction plan is equivalent and reusable") {
  Graph g = golden_graph();
  KspReductionPlan plan = make_ksp_reduction_plan(g, S, T);
  for (std::size_t k : {1, 3, 5}) {
    auto with_plan = accelerated_ksp(g, S, T, k, &plan);
    auto without = accelerated_ksp(g, S, T, k);
    REQUIRE(with_plan.size() == without.size());
    for (std::size_t i = 0; i < without.size(); ++i)
      REQUIRE(with_plan[i].nodes == without[i].nodes);
  }
}

TEST_CASE("plain, accelerated and exhaustive searches agree on random graphs") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> size(4, 9);
  EnumerationBudget budget;
  int nontrivial = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = random_graph(rng, size(rng));
    NodeId s = 0, t = static_cast<NodeId>(g.node_count() - 1);
    auto brute = brute_force_ksp(g, s, t, 5, budget);
    for (std::size_t k = 1; k <= 5; ++k) {
      auto plain = yen_ksp(g, s, t, k);
      auto fast = accelerated_ksp(g, s, t, k);

      // the accelerated variant must be indistinguishable from the plain one
      REQUIRE(fast.size() == plain.size());
      for (std::size_t i = 0; i < plain.size(); ++i) {
        REQUIRE(fast[i].nodes == plain[i].nodes);
        REQUIRE(fast[i].cost == plain[i].cost);
      }

      // both must realize the exhaustive cost profile with valid simple paths
      std::size_t want = std::min(k, brute.size());
      REQUIRE(plain.size() == want);
      std::set<std::vector<NodeId>> distinct;
      for (std::size_t i = 0; i < want; ++i) {
        REQUIRE(plain[i].cost == brute[i].cost);
        REQUIRE(is_simple(plain[i].nodes));
        REQUIRE(plain[i].nodes.front() == s);
        REQUIRE(plain[i].nodes.back() == t);
        REQUIRE(path_cost(g, plain[i].nodes) == plain[i].cost);
        distinct.insert(plain[i].nodes);
      }
      REQUIRE(distinct.size() == want);
    }
    if (!brute.empty()) ++nontrivial;
  }
  REQUIRE(nontrivial > 60);  // the generator keeps the trials meaningful
}
