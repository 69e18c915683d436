#pragma once
// Route-set diversity measures over node sets.
//
//   jaccard_distance      1 - |A intersect B| / |A union B|
//   diversity             mean pairwise Jaccard distance of a path list
//   neighborhood          distance to the nearest strictly cheaper simple
//                         path (1 when none exists, e.g. for the shortest)
//   diversity_lower_bound guaranteed minimum diversity of ranked routes from
//                         their chain-coverage fractions alone
//
// The bound stems from the containment argument: a route's chain nodes
// cannot appear on any strictly cheaper path, so at least an omega fraction
// of the route is unique to it.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cvp/oracle.hpp"
#include "cvp/ranking.hpp"

namespace cvp {

inline double jaccard_distance(const std::vector<NodeId>& p, const std::vector<NodeId>& q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("empty path");
  std::set<NodeId> a(p.begin(), p.end()), b(q.begin(), q.end());
  std::size_t inter = 0;
  for (NodeId v : a) inter += b.count(v);
  std::size_t uni = a.size() + b.size() - inter;
  return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

// Mean Jaccard distance over all unordered pairs; needs at least two paths.
inline double diversity(const std::vector<ExplicitPath>& paths) {
  const std::size_t n = paths.size();
  if (n < 2) throw std::invalid_argument("diversity needs at least two paths");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      sum += jaccard_distance(paths[i].nodes, paths[j].nodes);
  return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

struct NeighborhoodResult {
  double size = 1.0;                         // min distance to a cheaper path
  std::optional<ExplicitPath> witness;       // a path attaining it
};

// Exhaustive by design: enumerates every simple s -> t path and keeps the
// nearest strictly cheaper one.
inline NeighborhoodResult neighborhood(const ExplicitPath& p, const Graph& g, NodeId s,
                                       NodeId t, const EnumerationBudget& budget = {}) {
  NeighborhoodResult res;
  for (std::vector<NodeId>& q : enumerate_simple_paths(g, s, t, budget)) {
    double c = oracle_detail::path_cost(g, q);
    if (c >= p.cost) continue;
    double d = jaccard_distance(p.nodes, q);
    if (!res.witness || d < res.size) {
      res.size = d;
      res.witness = ExplicitPath{std::move(q), c};
    }
  }
  return res;
}

// For records sorted by descending omega, every pair (i, j < i) satisfies
// delta >= omega_i, so the pair sum is bounded below by sum_i (i * omega_i)
// over 0-based ranks.  Input order is validated, not assumed.
inline double diversity_lower_bound(const std::vector<CvpRecord>& records_by_omega) {
  const std::size_t n = records_by_omega.size();
  if (n < 2) throw std::invalid_argument("bound needs at least two records");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && records_by_omega[i - 1].omega < records_by_omega[i].omega)
      throw std::invalid_argument("records are not sorted by descending omega");
    sum += static_cast<double>(i) * records_by_omega[i].omega;
  }
  return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace cvp
