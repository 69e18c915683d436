#pragma once
// Scoring, ranking and materializing the candidate routes named by the
// chain partition.
//
// Every chain yields one record holding, in O(1) per chain from cached tree
// data:
//
//   cost    dist_s[v] + dist_t[v] for any chain member v (equal across the
//           chain; +infinity when either tree misses it)
//   omega   node fraction of the route covered by the chain,
//           (chain_hops + 1) / (route_hops + 1)
//   rho     fraction of the route cost spent inside the chain,
//           (dist_s[tail] - dist_s[head]) / cost
//
// extract_cvp materializes the full route: the predecessor walk from the
// chain head back to s, the chain itself, then the successor walk from the
// tail to t.  Routes may revisit a node (the two walks can overlap); chains
// themselves never do.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cvp/partition.hpp"
#include "cvp/spt.hpp"

namespace cvp {

struct CvpRecord {
  std::int32_t chain_index = -1;
  NodeId head = kNoNode;
  NodeId tail = kNoNode;
  double cost = kInfCost;
  std::int32_t route_hops = -1;  // edge count of the full route; -1 when unreachable
  std::int32_t chain_hops = 0;   // edge count inside the chain
  double omega = 0.0;            // 0 for unreachable records, else in (0, 1]
  double rho = 0.0;              // 0 for unreachable records, else in [0, 1]
};

struct ExplicitPath {
  std::vector<NodeId> nodes;
  double cost = 0.0;
};

enum class Measure { cost, omega, rho };

class CvpError : public std::runtime_error {
 public:
  explicit CvpError(const std::string& what) : std::runtime_error(what) {}
};

inline std::vector<CvpRecord> score_chains(const Partition& partition,
                                           const ShortestPathTree& beta,
                                           const ShortestPathTree& phi) {
  detail::check_trees(beta, phi);
  std::vector<CvpRecord> records;
  records.reserve(partition.size());
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const std::vector<NodeId>& nodes = partition.chains[i].nodes;
    CvpRecord r;
    r.chain_index = static_cast<std::int32_t>(i);
    r.head = nodes.front();
    r.tail = nodes.back();
    r.chain_hops = static_cast<std::int32_t>(nodes.size()) - 1;
    r.cost = beta.dist[r.head] + phi.dist[r.head];
    if (r.cost < kInfCost) {
      r.route_hops = beta.hops[r.head] + phi.hops[r.head];
      r.omega = static_cast<double>(r.chain_hops + 1) / static_cast<double>(r.route_hops + 1);
      // Zero-cost routes are all chain by convention.
      r.rho = r.cost > 0.0 ? (beta.dist[r.tail] - beta.dist[r.head]) / r.cost : 1.0;
    }
    records.push_back(r);
  }
  return records;
}

namespace detail {

// Measure value first, then cost, then head id: a total, deterministic order.
inline bool record_less(const CvpRecord& a, const CvpRecord& b, Measure m) {
  auto key = [m](const CvpRecord& r) {
    switch (m) {
      case Measure::cost:
        return r.cost;
      case Measure::omega:
        return -r.omega;  // descending
      default:
        return -r.rho;  // descending
    }
  };
  double ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb;
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.head < b.head;
}

}  // namespace detail

// Best k records under the chosen measure (all of them when k >= count).
inline std::vector<CvpRecord> rank(std::vector<CvpRecord> records, Measure measure,
                                   std::size_t k) {
  std::stable_sort(records.begin(), records.end(),
                   [measure](const CvpRecord& a, const CvpRecord& b) {
                     return detail::record_less(a, b, measure);
                   });
  if (records.size() > k) records.resize(k);
  return records;
}

// Alternative-route filter: keep records with cost within max_cost_ratio of
// the cheapest finite record and rho at least min_rho, cost-ascending.
// Unreachable records never qualify (their rho is pinned to 0).
inline std::vector<CvpRecord> select_by_thresholds(
    const std::vector<CvpRecord>& records, double max_cost_ratio, double min_rho,
    std::optional<std::size_t> k = std::nullopt) {
  double best = kInfCost;
  for (const CvpRecord& r : records) best = std::min(best, r.cost);
  std::vector<CvpRecord> out;
  if (best == kInfCost) return out;  // nothing reaches both endpoints
  for (const CvpRecord& r : records)
    if (r.cost < kInfCost && r.cost <= max_cost_ratio * best && r.rho >= min_rho)
      out.push_back(r);
  std::stable_sort(out.begin(), out.end(), [](const CvpRecord& a, const CvpRecord& b) {
    return detail::record_less(a, b, Measure::cost);
  });
  if (k && out.size() > *k) out.resize(*k);
  return out;
}

// Full route for one chain: backward tree walk, chain, forward tree walk.
inline ExplicitPath extract_cvp(const RpcChain& chain, const ShortestPathTree& beta,
                                const ShortestPathTree& phi, NodeId s, NodeId t) {
  detail::check_trees(beta, phi);
  if (chain.nodes.empty()) throw CvpError("empty chain");
  NodeId head = chain.nodes.front();
  NodeId tail = chain.nodes.back();
  if (!beta.reachable(head) || !phi.reachable(tail))
    throw CvpError("chain is not connected to both endpoints");

  std::vector<NodeId> prefix;  // head -> s, collected backward
  for (NodeId x = head; x != s;) {
    x = beta.parent[x];
    prefix.push_back(x);
  }

  ExplicitPath path;
  path.nodes.assign(prefix.rbegin(), prefix.rend());
  path.nodes.insert(path.nodes.end(), chain.nodes.begin(), chain.nodes.end());
  for (NodeId x = tail; x != t;) {
    x = phi.parent[x];
    path.nodes.push_back(x);
  }
  path.cost = beta.dist[head] + phi.dist[head];
  return path;
}

}  // namespace cvp
